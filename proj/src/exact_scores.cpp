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

#include "votescore/exact_scores.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>

#include "votescore/error.hpp"

namespace votescore {
namespace {

void check_candidate(const Profile& profile, CandidateIndex c) {
  if (c >= profile.candidate_count()) {
    throw UnknownCandidate("#" + std::to_string(c));
  }
}

std::uint64_t majority_threshold(std::uint64_t n) { return n / 2 + 1; }

// First expanded voter index of every ballot.
std::vector<std::uint64_t> ballot_starts(const Profile& profile) {
  std::vector<std::uint64_t> starts;
  std::uint64_t next = 0;
  for (const Ballot& b : profile.ballots()) {
    starts.push_back(next);
    next += b.multiplicity;
  }
  return starts;
}

}  // namespace

DodgsonMoveEncoding::DodgsonMoveEncoding(const Profile& profile,
                                         CandidateIndex candidate)
    : candidate_(candidate),
      voter_count_(profile.voter_count()),
      candidate_count_(profile.candidate_count()) {
  check_candidate(profile, candidate);
  for (std::size_t b = 0; b < profile.ballots().size(); ++b) {
    const Ballot& ballot = profile.ballots()[b];
    for (std::uint64_t r = 0; r < ballot.multiplicity; ++r) {
      orders_.push_back(ballot.ranking);
      position_.push_back(profile.position(b, candidate));
    }
  }
  const PairwiseTally counts = tally(profile);
  wins_.assign(candidate_count_, 0);
  for (CandidateIndex k = 0; k < candidate_count_; ++k) {
    if (k != candidate) wins_[k] = counts.count(candidate, k);
  }
}

const std::vector<CandidateIndex>& DodgsonMoveEncoding::order(
    std::uint64_t voter) const {
  if (voter >= voter_count_) {
    throw GuardViolation("voter index out of range");
  }
  return orders_[voter];
}

std::size_t DodgsonMoveEncoding::max_lift(std::uint64_t voter) const {
  order(voter);
  return position_[voter];
}

bool DodgsonMoveEncoding::gain(std::uint64_t voter, std::size_t lift,
                               CandidateIndex rival) const {
  const auto& ranking = order(voter);
  const std::size_t pos = position_[voter];
  if (lift == 0 || lift > pos || rival == candidate_) return false;
  for (std::size_t p = pos - lift; p < pos; ++p) {
    if (ranking[p] == rival) return true;
  }
  return false;
}

DodgsonMoveEncoding gain_matrix(const Profile& profile,
                                CandidateIndex candidate) {
  return DodgsonMoveEncoding(profile, candidate);
}

lp::LinearProgram dodgson_program(const Profile& profile,
                                  CandidateIndex candidate) {
  check_candidate(profile, candidate);
  const std::size_t m = profile.candidate_count();
  const PairwiseTally counts = tally(profile);
  const std::uint64_t need = majority_threshold(profile.voter_count());

  lp::LinearProgram program(lp::Sense::kMinimize);
  // gains[k] accumulates the rival-k coefficient row.
  std::vector<std::vector<Rational>> gains(m);
  for (std::size_t b = 0; b < profile.ballots().size(); ++b) {
    const Ballot& ballot = profile.ballots()[b];
    const std::size_t pos = profile.position(b, candidate);
    if (pos == 0) continue;
    const Rational mult = from_count(ballot.multiplicity);
    std::vector<Rational> per_ballot;
    for (std::size_t j = 1; j <= pos; ++j) {
      const std::size_t col = program.add_variable(
          "x_" + std::to_string(b) + "_" + std::to_string(j), Rational(0),
          mult, true);
      program.set_objective_coefficient(col, Rational(static_cast<long>(j)));
      per_ballot.resize(col + 1);
      per_ballot[col] = 1;
      for (std::size_t p = pos - j; p < pos; ++p) {
        auto& row = gains[ballot.ranking[p]];
        row.resize(col + 1);
        row[col] = 1;
      }
    }
    program.add_constraint(std::move(per_ballot), lp::Relation::kLessEqual,
                           mult);
  }
  for (CandidateIndex k = 0; k < m; ++k) {
    if (k == candidate) continue;
    const std::uint64_t have = counts.count(candidate, k);
    if (have >= need) continue;
    program.add_constraint(std::move(gains[k]), lp::Relation::kGreaterEqual,
                           from_count(need - have));
  }
  return program;
}

DodgsonResult dodgson_score(const Profile& profile, CandidateIndex candidate) {
  check_candidate(profile, candidate);
  if (profile.voter_count() == 0) {
    throw GuardViolation("Dodgson score needs at least one voter");
  }
  const lp::LinearProgram program = dodgson_program(profile, candidate);
  const lp::Solution solution = lp::solve_ilp(program);
  if (!solution.optimal()) {
    throw Error(std::string("Dodgson program not optimal: ") +
                lp::to_string(solution.status));
  }

  DodgsonResult result;
  result.score = solution.objective_value.get_num().get_ui();
  const auto starts = ballot_starts(profile);
  std::size_t col = 0;
  for (std::size_t b = 0; b < profile.ballots().size(); ++b) {
    const std::size_t pos = profile.position(b, candidate);
    std::uint64_t voter = starts[b];
    for (std::size_t j = 1; j <= pos; ++j, ++col) {
      const std::uint64_t count = solution.values[col].get_num().get_ui();
      for (std::uint64_t t = 0; t < count; ++t) {
        result.witness.push_back({voter++, j});
      }
    }
  }
  return result;
}

namespace {

// Permutations of 0..m-1 in lexicographic order, indexed densely.
struct PermutationTable {
  explicit PermutationTable(std::size_t m) : m(m) {
    std::vector<CandidateIndex> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      index.emplace(encode(perm), perms.size());
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    neighbors.resize(perms.size());
    for (std::size_t p = 0; p < perms.size(); ++p) {
      for (std::size_t s = 0; s + 1 < m; ++s) {
        auto next = perms[p];
        std::swap(next[s], next[s + 1]);
        neighbors[p].push_back(index.at(encode(next)));
      }
    }
  }

  std::uint64_t encode(const std::vector<CandidateIndex>& perm) const {
    std::uint64_t code = 0;
    for (CandidateIndex c : perm) code = code * m + c;
    return code;
  }

  std::size_t m;
  std::vector<std::vector<CandidateIndex>> perms;
  std::vector<std::vector<std::size_t>> neighbors;
  std::map<std::uint64_t, std::size_t> index;
};

}  // namespace

std::uint64_t dodgson_score_bruteforce(const Profile& profile,
                                       CandidateIndex candidate,
                                       const DodgsonOracleLimits& limits) {
  check_candidate(profile, candidate);
  const std::uint64_t n = profile.voter_count();
  const std::size_t m = profile.candidate_count();
  if (n == 0) throw GuardViolation("Dodgson score needs at least one voter");
  if (n > limits.max_voters || m > limits.max_candidates) {
    throw GuardViolation("swap search capped at " +
                         std::to_string(limits.max_voters) + " voters and " +
                         std::to_string(limits.max_candidates) +
                         " candidates");
  }

  const PermutationTable table(m);
  const std::uint64_t radix = table.perms.size();
  // wins_mask[p] has bit k set when perm p ranks the candidate above k.
  std::vector<std::uint32_t> wins_mask(radix, 0);
  for (std::size_t p = 0; p < radix; ++p) {
    bool above = true;
    for (CandidateIndex x : table.perms[p]) {
      if (x == candidate) {
        above = false;
      } else if (!above) {
        wins_mask[p] |= 1u << x;
      }
    }
  }
  const std::uint64_t need = majority_threshold(n);
  auto is_goal = [&](const std::vector<std::size_t>& state) {
    for (CandidateIndex k = 0; k < m; ++k) {
      if (k == candidate) continue;
      std::uint64_t votes = 0;
      for (std::size_t p : state) votes += (wins_mask[p] >> k) & 1u;
      if (votes < need) return false;
    }
    return true;
  };
  auto pack = [&](const std::vector<std::size_t>& state) {
    std::uint64_t code = 0;
    for (std::size_t p : state) code = code * radix + p;
    return code;
  };
  auto unpack = [&](std::uint64_t code) {
    std::vector<std::size_t> state(n);
    for (std::uint64_t i = n; i-- > 0;) {
      state[i] = code % radix;
      code /= radix;
    }
    return state;
  };

  std::vector<std::size_t> start;
  for (std::uint64_t v = 0; v < n; ++v) {
    start.push_back(table.index.at(table.encode(profile.order_of(v))));
  }
  if (is_goal(start)) return 0;

  // Dense bitmap when the whole state space is small, hash set otherwise.
  std::uint64_t space = 1;
  bool dense = true;
  for (std::uint64_t v = 0; v < n && dense; ++v) {
    if (space > (std::uint64_t{1} << 28) / radix) dense = false;
    space *= radix;
  }
  std::vector<bool> seen_bits(dense ? space : 0, false);
  std::unordered_set<std::uint64_t> seen_set;
  std::size_t visited_count = 0;
  auto visit = [&](std::uint64_t code) {
    if (dense) {
      if (seen_bits[code]) return false;
      seen_bits[code] = true;
    } else if (!seen_set.insert(code).second) {
      return false;
    }
    ++visited_count;
    return true;
  };

  std::vector<std::uint64_t> frontier{pack(start)};
  visit(frontier.front());
  for (std::uint64_t depth = 1; !frontier.empty(); ++depth) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t code : frontier) {
      std::vector<std::size_t> state = unpack(code);
      for (std::uint64_t v = 0; v < n; ++v) {
        const std::size_t saved = state[v];
        for (std::size_t neighbor : table.neighbors[saved]) {
          state[v] = neighbor;
          const std::uint64_t packed = pack(state);
          if (!visit(packed)) continue;
          if (is_goal(state)) return depth;
          next.push_back(packed);
          if (visited_count > limits.max_states) {
            throw GuardViolation("swap search exceeded " +
                                 std::to_string(limits.max_states) +
                                 " states");
          }
        }
        state[v] = saved;
      }
    }
    frontier = std::move(next);
  }
  throw Error("swap search exhausted without a Condorcet winner");
}

std::vector<CandidateIndex> binding_rivals(const Profile& profile,
                                           CandidateIndex candidate) {
  check_candidate(profile, candidate);
  const std::size_t m = profile.candidate_count();
  const std::size_t ballots = profile.ballots().size();
  std::vector<std::vector<bool>> beats(m);
  for (CandidateIndex k = 0; k < m; ++k) {
    if (k == candidate) continue;
    beats[k].resize(ballots);
    for (std::size_t b = 0; b < ballots; ++b) {
      beats[k][b] = profile.prefers(b, candidate, k);
    }
  }
  auto subset = [&](CandidateIndex a, CandidateIndex b) {
    for (std::size_t i = 0; i < ballots; ++i) {
      if (beats[a][i] && !beats[b][i]) return false;
    }
    return true;
  };
  std::vector<CandidateIndex> kept;
  for (CandidateIndex k = 0; k < m; ++k) {
    if (k == candidate) continue;
    bool implied = false;
    for (CandidateIndex o = 0; o < m && !implied; ++o) {
      if (o == candidate || o == k || !subset(o, k)) continue;
      // equal patterns: the lower index survives
      implied = !subset(k, o) || o < k;
    }
    if (!implied) kept.push_back(k);
  }
  return kept;
}

lp::LinearProgram young_program(const Profile& profile,
                                CandidateIndex candidate) {
  check_candidate(profile, candidate);
  lp::LinearProgram program(lp::Sense::kMaximize);
  for (std::size_t b = 0; b < profile.ballots().size(); ++b) {
    const Rational mult = from_count(profile.ballots()[b].multiplicity);
    const std::size_t col = program.add_variable("y_" + std::to_string(b),
                                                 Rational(0), mult, true);
    program.set_objective_coefficient(col, Rational(1));
  }
  // 2 * sum_{c > k} y - sum y >= 1
  for (CandidateIndex k : binding_rivals(profile, candidate)) {
    std::vector<Rational> row(program.variable_count());
    for (std::size_t b = 0; b < profile.ballots().size(); ++b) {
      row[b] = profile.prefers(b, candidate, k) ? 1 : -1;
    }
    program.add_constraint(std::move(row), lp::Relation::kGreaterEqual,
                           Rational(1));
  }
  return program;
}

YoungResult young_score(const Profile& profile, CandidateIndex candidate) {
  check_candidate(profile, candidate);
  YoungResult result;
  if (profile.voter_count() == 0) return result;
  const lp::LinearProgram program = young_program(profile, candidate);
  const lp::Solution solution = lp::solve_ilp(program);
  if (solution.status == lp::Status::kInfeasible) return result;
  if (!solution.optimal()) {
    throw Error(std::string("Young program not optimal: ") +
                lp::to_string(solution.status));
  }
  result.score = solution.objective_value.get_num().get_ui();
  const auto starts = ballot_starts(profile);
  for (std::size_t b = 0; b < profile.ballots().size(); ++b) {
    const std::uint64_t count = solution.values[b].get_num().get_ui();
    for (std::uint64_t t = 0; t < count; ++t) {
      result.kept.push_back(starts[b] + t);
    }
  }
  return result;
}

YoungResult young_score_bruteforce(const Profile& profile,
                                   CandidateIndex candidate,
                                   std::uint64_t max_voters) {
  check_candidate(profile, candidate);
  const std::uint64_t n = profile.voter_count();
  if (n > max_voters || n > 62) {
    throw GuardViolation("subset enumeration capped at " +
                         std::to_string(std::min<std::uint64_t>(max_voters, 62)) +
                         " voters");
  }
  const std::size_t m = profile.candidate_count();
  // masks[k]: voters preferring the candidate to rival k.
  std::vector<std::uint64_t> masks;
  for (CandidateIndex k = 0; k < m; ++k) {
    if (k == candidate) continue;
    std::uint64_t mask = 0;
    for (std::uint64_t v = 0; v < n; ++v) {
      const auto& order = profile.order_of(v);
      const auto pc = std::find(order.begin(), order.end(), candidate);
      const auto pk = std::find(order.begin(), order.end(), k);
      if (pc < pk) mask |= std::uint64_t{1} << v;
    }
    masks.push_back(mask);
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t size = n; size >= 1; --size) {
    // Gosper's hack over size-subsets of n voters.
    std::uint64_t subset = (std::uint64_t{1} << size) - 1;
    while (subset <= all) {
      bool wins = true;
      for (std::uint64_t mask : masks) {
        if (2 * static_cast<std::uint64_t>(std::popcount(subset & mask)) <=
            size) {
          wins = false;
          break;
        }
      }
      if (wins) {
        YoungResult result{size, {}};
        for (std::uint64_t v = 0; v < n; ++v) {
          if ((subset >> v) & 1u) result.kept.push_back(v);
        }
        return result;
      }
      const std::uint64_t low = subset & (~subset + 1);
      const std::uint64_t ripple = subset + low;
      if (ripple == 0 || ripple > all) break;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
    }
  }
  return {};
}

Profile apply_lifts(const Profile& profile, CandidateIndex candidate,
                    const std::vector<Lift>& lifts) {
  check_candidate(profile, candidate);
  std::map<std::uint64_t, std::size_t> distance;
  for (const Lift& lift : lifts) {
    if (!distance.emplace(lift.voter, lift.distance).second) {
      throw GuardViolation("voter lifted twice");
    }
  }
  std::vector<Ballot> ballots;
  for (std::uint64_t v = 0; v < profile.voter_count(); ++v) {
    std::vector<CandidateIndex> order = profile.order_of(v);
    if (auto it = distance.find(v); it != distance.end()) {
      auto pos = static_cast<std::size_t>(
          std::find(order.begin(), order.end(), candidate) - order.begin());
      if (it->second > pos) throw GuardViolation("lift past the top");
      std::rotate(order.begin() + static_cast<std::ptrdiff_t>(pos - it->second),
                  order.begin() + static_cast<std::ptrdiff_t>(pos),
                  order.begin() + static_cast<std::ptrdiff_t>(pos + 1));
    }
    if (!ballots.empty() && ballots.back().ranking == order) {
      ++ballots.back().multiplicity;
    } else {
      ballots.push_back({std::move(order), 1});
    }
  }
  for (const auto& [voter, d] : distance) {
    if (voter >= profile.voter_count()) {
      throw GuardViolation("lift names an unknown voter");
    }
  }
  return Profile(profile.candidates(), std::move(ballots), true);
}

bool validate_dodgson_witness(const Profile& profile, CandidateIndex candidate,
                              const DodgsonResult& result) {
  std::uint64_t cost = 0;
  for (const Lift& lift : result.witness) cost += lift.distance;
  if (cost != result.score) return false;
  try {
    return condorcet_winner(apply_lifts(profile, candidate, result.witness)) ==
           candidate;
  } catch (const Error&) {
    return false;
  }
}

bool validate_young_witness(const Profile& profile, CandidateIndex candidate,
                            const YoungResult& result) {
  if (result.kept.size() != result.score) return false;
  if (result.score == 0) return true;
  try {
    return condorcet_winner(restrict_to(profile, result.kept)) == candidate;
  } catch (const Error&) {
    return false;
  }
}

std::vector<std::uint64_t> dodgson_scores(const Profile& profile) {
  std::vector<std::uint64_t> scores;
  for (CandidateIndex c = 0; c < profile.candidate_count(); ++c) {
    scores.push_back(dodgson_score(profile, c).score);
  }
  return scores;
}

std::vector<std::uint64_t> young_scores(const Profile& profile) {
  std::vector<std::uint64_t> scores;
  for (CandidateIndex c = 0; c < profile.candidate_count(); ++c) {
    scores.push_back(young_score(profile, c).score);
  }
  return scores;
}

bool dodgson_winner(const Profile& profile, CandidateIndex c) {
  check_candidate(profile, c);
  const auto scores = dodgson_scores(profile);
  return scores[c] == *std::min_element(scores.begin(), scores.end());
}

bool dodgson_ranking(const Profile& profile, CandidateIndex c,
                     CandidateIndex d) {
  check_candidate(profile, c);
  check_candidate(profile, d);
  return dodgson_score(profile, c).score <= dodgson_score(profile, d).score;
}

bool young_winner(const Profile& profile, CandidateIndex c) {
  check_candidate(profile, c);
  const auto scores = young_scores(profile);
  return scores[c] == *std::max_element(scores.begin(), scores.end());
}

bool young_ranking(const Profile& profile, CandidateIndex c,
                   CandidateIndex d) {
  check_candidate(profile, c);
  check_candidate(profile, d);
  return young_score(profile, c).score >= young_score(profile, d).score;
}

}  // namespace votescore
