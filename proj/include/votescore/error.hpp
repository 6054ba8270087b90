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

#ifndef VOTESCORE_ERROR_HPP_
#define VOTESCORE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace votescore {

// Base class for every domain failure raised by the library. The CLI maps
// all of these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `line()` is 1-based; 0 means "whole document".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class UnknownCandidate : public Error {
 public:
  explicit UnknownCandidate(const std::string& name)
      : Error("unknown candidate '" + name + "'") {}
};

// A precondition on the input (size cap, reduction guard, bad argument).
class GuardViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace votescore

#endif  // VOTESCORE_ERROR_HPP_
