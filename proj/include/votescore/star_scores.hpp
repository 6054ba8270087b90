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

// Homogeneous (limit) variants of the Dodgson and Young scores:
//
//   score*(c) = lim_{q -> inf} score(c, qV) / q
//
// Both limits are values of linear programs over exact rationals.

#ifndef VOTESCORE_STAR_SCORES_HPP_
#define VOTESCORE_STAR_SCORES_HPP_

#include <vector>

#include "votescore/lp.hpp"
#include "votescore/profile.hpp"
#include "votescore/rational.hpp"

namespace votescore {

struct StarResult {
  Rational score;
  // Optimal program variables: x_{i,j} for Dodgson*, y_v for Young*.
  std::vector<Rational> weights;
};

// Variables x_{i,j} in [0, 1] for every expanded voter i and lift
// j = 0 .. (number of candidates above c), where x_{i,j} is the fraction of
// voter i's copies that lift c by j positions. Constraints:
//
//   sum_j x_{i,j} = 1                          for every voter i
//   sum_{i,j} e_{i,j,k} x_{i,j} + w_k >= n / 2  for every rival k
//
// objective: minimize sum_{i,j} j * x_{i,j}. The strict majority of the
// finite problem becomes ">= n/2"; the excess of half a vote per copy
// vanishes in the limit.
lp::LinearProgram dodgson_star_program(const Profile& profile,
                                       CandidateIndex candidate);

StarResult dodgson_star_score(const Profile& profile,
                              CandidateIndex candidate);

// Weights y_v in [0, 1] per expanded voter; maximize sum y_v subject to
// sum_{v: c > k} y_v >= sum_{v: k > c} y_v for every rival k.
lp::LinearProgram young_star_program(const Profile& profile,
                                     CandidateIndex candidate);

// Optimal value of young_star_program alone. An upper bound on
// young_score(qV) / q for every q.
Rational young_star_relaxation(const Profile& profile,
                               CandidateIndex candidate);

// The Young limit. Equals the young_star_program value when some weighting
// gives the candidate a strictly positive margin against every rival, and 0
// otherwise: without such a weighting no replicated subset makes the
// candidate a Condorcet winner.
StarResult young_star_score(const Profile& profile, CandidateIndex candidate);

// Largest t such that some weighting y in [0, 1]^n has margin >= t against
// every rival (capped at 1). Positive iff a strictly winning weighting
// exists.
Rational young_strict_margin(const Profile& profile,
                             CandidateIndex candidate);

std::vector<Rational> dodgson_star_scores(const Profile& profile);
std::vector<Rational> young_star_scores(const Profile& profile);

bool dodgson_star_winner(const Profile& profile, CandidateIndex c);
bool dodgson_star_ranking(const Profile& profile, CandidateIndex c,
                          CandidateIndex d);
bool young_star_winner(const Profile& profile, CandidateIndex c);
bool young_star_ranking(const Profile& profile, CandidateIndex c,
                        CandidateIndex d);

}  // namespace votescore

#endif  // VOTESCORE_STAR_SCORES_HPP_
