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

// Exact Dodgson and Young scores.
//
// The production routes are integer programs solved by lp::solve_ilp. Each
// has an independent exhaustive oracle (swap BFS, subset enumeration) used
// by the tests.

#ifndef VOTESCORE_EXACT_SCORES_HPP_
#define VOTESCORE_EXACT_SCORES_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "votescore/lp.hpp"
#include "votescore/profile.hpp"

namespace votescore {

// Effect of lifting a candidate c upward in each voter's order.
//
// For expanded voter i, lifts j = 1 .. max_lift(i) are possible, where
// max_lift(i) is the number of candidates ranked above c (0 when c is on
// top). gain(i, j, k) is true iff rival k is among the j candidates directly
// above c, i.e. c passes k when lifted j steps. wins(k) counts voters who
// already prefer c to k.
class DodgsonMoveEncoding {
 public:
  DodgsonMoveEncoding(const Profile& profile, CandidateIndex candidate);

  CandidateIndex candidate() const { return candidate_; }
  std::uint64_t voter_count() const { return voter_count_; }
  std::size_t candidate_count() const { return candidate_count_; }

  std::size_t max_lift(std::uint64_t voter) const;
  bool gain(std::uint64_t voter, std::size_t lift, CandidateIndex rival) const;
  std::uint64_t wins(CandidateIndex rival) const { return wins_.at(rival); }

 private:
  const std::vector<CandidateIndex>& order(std::uint64_t voter) const;

  CandidateIndex candidate_;
  std::uint64_t voter_count_;
  std::size_t candidate_count_;
  std::vector<std::vector<CandidateIndex>> orders_;  // per expanded voter
  std::vector<std::size_t> position_;                // of c, per voter
  std::vector<std::uint64_t> wins_;
};

// Throws UnknownCandidate (via index check) on bad input.
DodgsonMoveEncoding gain_matrix(const Profile& profile,
                                CandidateIndex candidate);

// Lift `distance` positions of the scored candidate in expanded voter
// `voter`.
struct Lift {
  std::uint64_t voter = 0;
  std::size_t distance = 0;

  friend bool operator==(const Lift&, const Lift&) = default;
};

struct DodgsonResult {
  std::uint64_t score = 0;
  std::vector<Lift> witness;  // sorted by voter
};

struct YoungResult {
  std::uint64_t score = 0;
  std::vector<std::uint64_t> kept;  // expanded voter indices, ascending
};

// Integer program for the Dodgson score of `candidate`. Identical ballots
// share one integer variable per lift distance (bounded by the ballot's
// multiplicity) with at most `multiplicity` lifts per ballot in total; each
// rival must end with at least floor(n/2) + 1 votes against it.
lp::LinearProgram dodgson_program(const Profile& profile,
                                  CandidateIndex candidate);

// Minimum number of adjacent swaps that makes `candidate` the Condorcet
// winner.
DodgsonResult dodgson_score(const Profile& profile, CandidateIndex candidate);

struct DodgsonOracleLimits {
  std::uint64_t max_voters = 5;
  std::size_t max_candidates = 5;
  std::size_t max_states = 20'000'000;
};

// Breadth-first search over all profiles reachable by adjacent swaps in any
// voter. Throws GuardViolation past `limits`.
std::uint64_t dodgson_score_bruteforce(const Profile& profile,
                                       CandidateIndex candidate,
                                       const DodgsonOracleLimits& limits = {});

// Rivals whose majority constraint is not implied by another one: k is
// dropped when `candidate` beats some other rival k' in a subset of the
// ballots where it beats k. Duplicates keep the lowest index.
std::vector<CandidateIndex> binding_rivals(const Profile& profile,
                                           CandidateIndex candidate);

// Integer program for the Young score: one integer keep-count per ballot,
// maximize the kept total T subject to 2 * (kept voters preferring c to k)
// >= T + 1 for every rival k.
lp::LinearProgram young_program(const Profile& profile,
                                CandidateIndex candidate);

// Size of a largest voter subset in which `candidate` is the Condorcet
// winner; 0 when no nonempty subset works.
YoungResult young_score(const Profile& profile, CandidateIndex candidate);

// Exhaustive subset enumeration, largest subsets first.
YoungResult young_score_bruteforce(const Profile& profile,
                                   CandidateIndex candidate,
                                   std::uint64_t max_voters = 22);

// Applies a Dodgson witness; lifted voters are split into their own ballots.
Profile apply_lifts(const Profile& profile, CandidateIndex candidate,
                    const std::vector<Lift>& lifts);

// Replays a witness and checks it proves `score`.
bool validate_dodgson_witness(const Profile& profile, CandidateIndex candidate,
                              const DodgsonResult& result);
bool validate_young_witness(const Profile& profile, CandidateIndex candidate,
                            const YoungResult& result);

std::vector<std::uint64_t> dodgson_scores(const Profile& profile);
std::vector<std::uint64_t> young_scores(const Profile& profile);

// Winner: score(c) <= score(d) for every d. Ranking: c ties or defeats d.
bool dodgson_winner(const Profile& profile, CandidateIndex c);
bool dodgson_ranking(const Profile& profile, CandidateIndex c,
                     CandidateIndex d);

// Same with >= on Young scores.
bool young_winner(const Profile& profile, CandidateIndex c);
bool young_ranking(const Profile& profile, CandidateIndex c, CandidateIndex d);

}  // namespace votescore

#endif  // VOTESCORE_EXACT_SCORES_HPP_
