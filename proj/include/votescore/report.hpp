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

#ifndef VOTESCORE_REPORT_HPP_
#define VOTESCORE_REPORT_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "votescore/profile.hpp"
#include "votescore/rational.hpp"
#include "votescore/schemes.hpp"

namespace votescore {

enum class Format { kText, kJson };

Format parse_format(std::string_view text);

struct ScoreEntry {
  std::string candidate;
  Rational score;
  // Rendered witness: comma separated lifts "voter:+j" or kept voters.
  std::optional<std::string> witness;
};

struct ScoreReport {
  Scheme scheme = Scheme::kDodgson;
  std::vector<ScoreEntry> entries;  // candidate file order
};

// Scores `only` (all candidates when empty). Exact schemes can attach
// witnesses with 1-based voter numbers.
ScoreReport build_report(Scheme scheme, const Profile& profile,
                         std::span<const CandidateIndex> only = {},
                         bool with_witness = false);

// Text: aligned "candidate score [witness]" columns under a header.
// JSON: {"<candidate>": <score>, ...} in entry order; exact scores are
// integers, starred scores "p/q" strings. An entry with a witness becomes
// {"score": <score>, "witness": "..."}.
std::string emit_report(const ScoreReport& report, Format format);

// Reads back the entries written by emit_report.
ScoreReport parse_report(std::string_view text, Format format, Scheme scheme);

}  // namespace votescore

#endif  // VOTESCORE_REPORT_HPP_
