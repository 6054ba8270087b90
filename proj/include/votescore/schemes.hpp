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

#ifndef VOTESCORE_SCHEMES_HPP_
#define VOTESCORE_SCHEMES_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "votescore/profile.hpp"
#include "votescore/rational.hpp"

namespace votescore {

enum class Scheme { kDodgson, kYoung, kDodgsonStar, kYoungStar };

// "dodgson", "young", "dodgson-star", "young-star".
std::string_view to_string(Scheme scheme);
// Also accepts "dodgson*" and "young*". Throws GuardViolation.
Scheme parse_scheme(std::string_view text);

bool is_starred(Scheme scheme);
// Dodgson-type scores are costs; Young-type scores are sizes.
bool lower_is_better(Scheme scheme);

// Caps the replicated electorate for the exact schemes.
inline constexpr std::uint64_t kExactHomogeneityVoterCap = 256;

Rational score(Scheme scheme, const Profile& profile, CandidateIndex c);
std::vector<Rational> scores(Scheme scheme, const Profile& profile);

// Candidates with the best score, ascending index.
std::vector<CandidateIndex> winner_set(Scheme scheme, const Profile& profile);

bool is_winner(Scheme scheme, const Profile& profile, CandidateIndex c);
// c ties or defeats d.
bool ranks_at_least(Scheme scheme, const Profile& profile, CandidateIndex c,
                    CandidateIndex d);

// True iff the winner set on `profile` equals the one on qV. Exact schemes
// throw GuardViolation when q * n exceeds kExactHomogeneityVoterCap.
bool homogeneity_check(Scheme scheme, const Profile& profile, std::uint64_t q);

}  // namespace votescore

#endif  // VOTESCORE_SCHEMES_HPP_
