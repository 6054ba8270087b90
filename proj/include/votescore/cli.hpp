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

#ifndef VOTESCORE_CLI_HPP_
#define VOTESCORE_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace votescore::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (args[0] is the program name). Results go to `out`,
// diagnostics to `err`. Decision verbs print `true`/`false` and exit 0 for
// either answer.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace votescore::cli

#endif  // VOTESCORE_CLI_HPP_
