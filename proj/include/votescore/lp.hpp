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

// Exact rational linear and integer programming.
//
// solve_lp runs a two-phase dense-tableau simplex with Bland's rule, so it
// terminates on degenerate programs. solve_ilp is a depth-first
// branch-and-bound over solve_lp. There are no tolerances anywhere: every
// returned optimum satisfies its program exactly.

#ifndef VOTESCORE_LP_HPP_
#define VOTESCORE_LP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "votescore/rational.hpp"

namespace votescore::lp {

enum class Sense { kMinimize, kMaximize };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Status { kOptimal, kInfeasible, kUnbounded };

const char* to_string(Status status);

struct Variable {
  std::string name;
  std::optional<Rational> lower;  // nullopt = -infinity
  std::optional<Rational> upper;  // nullopt = +infinity
  bool integral = false;          // honoured by solve_ilp only
};

struct Constraint {
  std::vector<Rational> coefficients;  // one per variable
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

class LinearProgram {
 public:
  explicit LinearProgram(Sense sense = Sense::kMinimize) : sense_(sense) {}

  // Returns the new variable's column index. Bounds default to [0, +inf).
  std::size_t add_variable(std::string name,
                           std::optional<Rational> lower = Rational(0),
                           std::optional<Rational> upper = std::nullopt,
                           bool integral = false);

  // `coefficients` must have one entry per variable; shorter vectors are
  // zero-padded, so constraints may be added before later variables.
  void add_constraint(std::vector<Rational> coefficients, Relation relation,
                      Rational rhs);

  void set_objective_coefficient(std::size_t column, Rational value);

  void set_bounds(std::size_t column, std::optional<Rational> lower,
                  std::optional<Rational> upper);

  Sense sense() const { return sense_; }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<Rational>& objective() const { return objective_; }
  std::size_t variable_count() const { return variables_.size(); }

  // Coefficient (column, row) with implicit zero padding.
  Rational coefficient(std::size_t row, std::size_t column) const;

  // Human-readable listing, one constraint per line.
  std::string debug_string() const;

 private:
  Sense sense_;
  std::vector<Variable> variables_;
  std::vector<Rational> objective_;
  std::vector<Constraint> constraints_;
};

struct Solution {
  Status status = Status::kInfeasible;
  std::vector<Rational> values;  // one per variable when optimal
  Rational objective_value;

  bool optimal() const { return status == Status::kOptimal; }
};

// Exact check by substitution: bounds, every constraint and (when
// `require_integral`) integrality of flagged variables.
bool is_feasible(const LinearProgram& program,
                 const std::vector<Rational>& values,
                 bool require_integral = false);

Rational evaluate_objective(const LinearProgram& program,
                            const std::vector<Rational>& values);

// Ignores the integral flags.
Solution solve_lp(const LinearProgram& program);

struct BranchAndBoundStats {
  std::size_t nodes = 0;
};

// Every integral variable must have finite bounds (GuardViolation
// otherwise). Branches on the fractional integral variable with the largest
// denominator, lowest column first on ties; explores the "<= floor" child
// first and prunes nodes whose relaxation cannot beat the incumbent.
Solution solve_ilp(const LinearProgram& program,
                   BranchAndBoundStats* stats = nullptr);

}  // namespace votescore::lp

#endif  // VOTESCORE_LP_HPP_
