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

#include "votescore/star_scores.hpp"

#include <algorithm>
#include <string>

#include "votescore/error.hpp"
#include "votescore/exact_scores.hpp"

namespace votescore {
namespace {

void check_candidate(const Profile& profile, CandidateIndex c) {
  if (c >= profile.candidate_count()) {
    throw UnknownCandidate("#" + std::to_string(c));
  }
}

Rational solve_value(const lp::LinearProgram& program, const char* what,
                     std::vector<Rational>* weights = nullptr) {
  lp::Solution solution = lp::solve_lp(program);
  if (!solution.optimal()) {
    throw Error(std::string(what) + " program not optimal: " +
                lp::to_string(solution.status));
  }
  if (weights) *weights = std::move(solution.values);
  return solution.objective_value;
}

// +1 when the expanded voter prefers c to k, -1 otherwise.
std::vector<int> margin_signs(const Profile& profile, CandidateIndex c,
                              CandidateIndex k) {
  std::vector<int> signs;
  for (std::size_t b = 0; b < profile.ballots().size(); ++b) {
    const int sign = profile.prefers(b, c, k) ? 1 : -1;
    signs.insert(signs.end(), profile.ballots()[b].multiplicity, sign);
  }
  return signs;
}

}  // namespace

lp::LinearProgram dodgson_star_program(const Profile& profile,
                                       CandidateIndex candidate) {
  const DodgsonMoveEncoding encoding = gain_matrix(profile, candidate);
  const std::uint64_t n = encoding.voter_count();
  const std::size_t m = encoding.candidate_count();

  lp::LinearProgram program(lp::Sense::kMinimize);
  std::vector<std::vector<Rational>> rival_rows(m);
  for (std::uint64_t i = 0; i < n; ++i) {
    std::vector<Rational> stay_or_move;
    for (std::size_t j = 0; j <= encoding.max_lift(i); ++j) {
      const std::size_t col = program.add_variable(
          "x_" + std::to_string(i) + "_" + std::to_string(j), Rational(0),
          Rational(1));
      program.set_objective_coefficient(col, from_count(j));
      stay_or_move.resize(col + 1);
      stay_or_move[col] = 1;
      for (CandidateIndex k = 0; k < m; ++k) {
        if (encoding.gain(i, j, k)) {
          rival_rows[k].resize(col + 1);
          rival_rows[k][col] = 1;
        }
      }
    }
    program.add_constraint(std::move(stay_or_move), lp::Relation::kEqual,
                           Rational(1));
  }
  const Rational half_n = from_count(n) / 2;
  for (CandidateIndex k = 0; k < m; ++k) {
    if (k == candidate) continue;
    program.add_constraint(std::move(rival_rows[k]),
                           lp::Relation::kGreaterEqual,
                           half_n - from_count(encoding.wins(k)));
  }
  return program;
}

StarResult dodgson_star_score(const Profile& profile,
                              CandidateIndex candidate) {
  check_candidate(profile, candidate);
  if (profile.voter_count() == 0) {
    throw GuardViolation("Dodgson* score needs at least one voter");
  }
  StarResult result;
  result.score = solve_value(dodgson_star_program(profile, candidate),
                             "Dodgson*", &result.weights);
  return result;
}

lp::LinearProgram young_star_program(const Profile& profile,
                                     CandidateIndex candidate) {
  check_candidate(profile, candidate);
  const std::uint64_t n = profile.voter_count();
  lp::LinearProgram program(lp::Sense::kMaximize);
  for (std::uint64_t v = 0; v < n; ++v) {
    const std::size_t col = program.add_variable("y_" + std::to_string(v),
                                                 Rational(0), Rational(1));
    program.set_objective_coefficient(col, Rational(1));
  }
  for (CandidateIndex k : binding_rivals(profile, candidate)) {
    const std::vector<int> signs = margin_signs(profile, candidate, k);
    std::vector<Rational> row(signs.begin(), signs.end());
    program.add_constraint(std::move(row), lp::Relation::kGreaterEqual,
                           Rational(0));
  }
  return program;
}

Rational young_star_relaxation(const Profile& profile,
                               CandidateIndex candidate) {
  return solve_value(young_star_program(profile, candidate), "Young*");
}

Rational young_strict_margin(const Profile& profile,
                             CandidateIndex candidate) {
  check_candidate(profile, candidate);
  const std::uint64_t n = profile.voter_count();
  lp::LinearProgram program(lp::Sense::kMaximize);
  for (std::uint64_t v = 0; v < n; ++v) {
    program.add_variable("y_" + std::to_string(v), Rational(0), Rational(1));
  }
  const std::size_t t = program.add_variable("t", std::nullopt, Rational(1));
  program.set_objective_coefficient(t, Rational(1));
  for (CandidateIndex k : binding_rivals(profile, candidate)) {
    const std::vector<int> signs = margin_signs(profile, candidate, k);
    std::vector<Rational> row(signs.begin(), signs.end());
    row.emplace_back(-1);
    program.add_constraint(std::move(row), lp::Relation::kGreaterEqual,
                           Rational(0));
  }
  return solve_value(program, "Young* margin");
}

StarResult young_star_score(const Profile& profile, CandidateIndex candidate) {
  check_candidate(profile, candidate);
  StarResult result;
  result.score = 0;
  if (profile.voter_count() == 0) return result;
  if (sgn(young_strict_margin(profile, candidate)) <= 0) {
    result.weights.assign(profile.voter_count(), Rational(0));
    return result;
  }
  result.score = solve_value(young_star_program(profile, candidate), "Young*",
                             &result.weights);
  return result;
}

std::vector<Rational> dodgson_star_scores(const Profile& profile) {
  std::vector<Rational> scores;
  for (CandidateIndex c = 0; c < profile.candidate_count(); ++c) {
    scores.push_back(dodgson_star_score(profile, c).score);
  }
  return scores;
}

std::vector<Rational> young_star_scores(const Profile& profile) {
  std::vector<Rational> scores;
  for (CandidateIndex c = 0; c < profile.candidate_count(); ++c) {
    scores.push_back(young_star_score(profile, c).score);
  }
  return scores;
}

bool dodgson_star_winner(const Profile& profile, CandidateIndex c) {
  check_candidate(profile, c);
  const auto scores = dodgson_star_scores(profile);
  return scores[c] == *std::min_element(scores.begin(), scores.end());
}

bool dodgson_star_ranking(const Profile& profile, CandidateIndex c,
                          CandidateIndex d) {
  check_candidate(profile, d);
  return dodgson_star_score(profile, c).score <=
         dodgson_star_score(profile, d).score;
}

bool young_star_winner(const Profile& profile, CandidateIndex c) {
  check_candidate(profile, c);
  const auto scores = young_star_scores(profile);
  return scores[c] == *std::max_element(scores.begin(), scores.end());
}

bool young_star_ranking(const Profile& profile, CandidateIndex c,
                        CandidateIndex d) {
  check_candidate(profile, d);
  return young_star_score(profile, c).score >=
         young_star_score(profile, d).score;
}

}  // namespace votescore
