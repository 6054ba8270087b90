// Copyright 2026 The votescore Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VOTESCORE_RATIONAL_HPP_
#define VOTESCORE_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace votescore {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator (gmpxx canonicalizes after every arithmetic operation).
using Rational = mpq_class;

inline Rational make_rational(std::int64_t numerator,
                              std::int64_t denominator = 1) {
  Rational r(mpz_class(static_cast<long>(numerator)),
             mpz_class(static_cast<long>(denominator)));
  r.canonicalize();
  return r;
}

inline Rational from_count(std::uint64_t count) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return Rational(mpz_class(static_cast<unsigned long>(count)));
}

// Always renders "p/q", including integers ("2/1").
std::string to_fraction_string(const Rational& value);

// Accepts "p/q" or a bare integer "p". Throws votescore::ParseError.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);

mpz_class floor_of(const Rational& value);
mpz_class ceil_of(const Rational& value);

}  // namespace votescore

#endif  // VOTESCORE_RATIONAL_HPP_
