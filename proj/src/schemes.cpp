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

#include "votescore/schemes.hpp"

#include <algorithm>

#include "votescore/error.hpp"
#include "votescore/exact_scores.hpp"
#include "votescore/star_scores.hpp"

namespace votescore {

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kDodgson:
      return "dodgson";
    case Scheme::kYoung:
      return "young";
    case Scheme::kDodgsonStar:
      return "dodgson-star";
    case Scheme::kYoungStar:
      return "young-star";
  }
  return "?";
}

Scheme parse_scheme(std::string_view text) {
  if (text == "dodgson") return Scheme::kDodgson;
  if (text == "young") return Scheme::kYoung;
  if (text == "dodgson-star" || text == "dodgson*") return Scheme::kDodgsonStar;
  if (text == "young-star" || text == "young*") return Scheme::kYoungStar;
  throw GuardViolation("unknown scheme '" + std::string(text) + "'");
}

bool is_starred(Scheme scheme) {
  return scheme == Scheme::kDodgsonStar || scheme == Scheme::kYoungStar;
}

bool lower_is_better(Scheme scheme) {
  return scheme == Scheme::kDodgson || scheme == Scheme::kDodgsonStar;
}

Rational score(Scheme scheme, const Profile& profile, CandidateIndex c) {
  switch (scheme) {
    case Scheme::kDodgson:
      return from_count(dodgson_score(profile, c).score);
    case Scheme::kYoung:
      return from_count(young_score(profile, c).score);
    case Scheme::kDodgsonStar:
      return dodgson_star_score(profile, c).score;
    case Scheme::kYoungStar:
      return young_star_score(profile, c).score;
  }
  throw GuardViolation("unknown scheme");
}

std::vector<Rational> scores(Scheme scheme, const Profile& profile) {
  std::vector<Rational> out;
  for (CandidateIndex c = 0; c < profile.candidate_count(); ++c) {
    out.push_back(score(scheme, profile, c));
  }
  return out;
}

std::vector<CandidateIndex> winner_set(Scheme scheme, const Profile& profile) {
  const auto values = scores(scheme, profile);
  const Rational best = lower_is_better(scheme)
                            ? *std::min_element(values.begin(), values.end())
                            : *std::max_element(values.begin(), values.end());
  std::vector<CandidateIndex> winners;
  for (CandidateIndex c = 0; c < values.size(); ++c) {
    if (values[c] == best) winners.push_back(c);
  }
  return winners;
}

bool is_winner(Scheme scheme, const Profile& profile, CandidateIndex c) {
  if (c >= profile.candidate_count()) {
    throw UnknownCandidate("#" + std::to_string(c));
  }
  const auto winners = winner_set(scheme, profile);
  return std::find(winners.begin(), winners.end(), c) != winners.end();
}

bool ranks_at_least(Scheme scheme, const Profile& profile, CandidateIndex c,
                    CandidateIndex d) {
  const Rational sc = score(scheme, profile, c);
  const Rational sd = score(scheme, profile, d);
  return lower_is_better(scheme) ? sc <= sd : sc >= sd;
}

bool homogeneity_check(Scheme scheme, const Profile& profile,
                       std::uint64_t q) {
  if (q == 0) throw GuardViolation("replication factor must be positive");
  if (!is_starred(scheme) &&
      profile.voter_count() > kExactHomogeneityVoterCap / q) {
    throw GuardViolation("replicated electorate exceeds " +
                         std::to_string(kExactHomogeneityVoterCap) +
                         " voters for an exact scheme");
  }
  return winner_set(scheme, profile) ==
         winner_set(scheme, replicate(profile, q));
}

}  // namespace votescore
