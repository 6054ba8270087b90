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

#include "votescore/lp.hpp"

#include <sstream>
#include <utility>

#include "votescore/error.hpp"

namespace votescore::lp {

const char* to_string(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "optimal";
    case Status::kInfeasible:
      return "infeasible";
    case Status::kUnbounded:
      return "unbounded";
  }
  return "?";
}

std::size_t LinearProgram::add_variable(std::string name,
                                        std::optional<Rational> lower,
                                        std::optional<Rational> upper,
                                        bool integral) {
  variables_.push_back(
      {std::move(name), std::move(lower), std::move(upper), integral});
  objective_.emplace_back(0);
  return variables_.size() - 1;
}

void LinearProgram::add_constraint(std::vector<Rational> coefficients,
                                   Relation relation, Rational rhs) {
  if (coefficients.size() > variables_.size()) {
    throw GuardViolation("constraint has more coefficients than variables");
  }
  constraints_.push_back({std::move(coefficients), relation, std::move(rhs)});
}

void LinearProgram::set_objective_coefficient(std::size_t column,
                                              Rational value) {
  objective_.at(column) = std::move(value);
}

void LinearProgram::set_bounds(std::size_t column,
                               std::optional<Rational> lower,
                               std::optional<Rational> upper) {
  Variable& v = variables_.at(column);
  v.lower = std::move(lower);
  v.upper = std::move(upper);
}

Rational LinearProgram::coefficient(std::size_t row,
                                    std::size_t column) const {
  const auto& coeffs = constraints_.at(row).coefficients;
  return column < coeffs.size() ? coeffs[column] : Rational(0);
}

std::string LinearProgram::debug_string() const {
  std::ostringstream out;
  out << (sense_ == Sense::kMinimize ? "minimize" : "maximize");
  for (std::size_t j = 0; j < variables_.size(); ++j) {
    if (objective_[j] != 0) {
      out << ' ' << (objective_[j] > 0 ? "+" : "") << objective_[j].get_str()
          << '*' << variables_[j].name;
    }
  }
  out << "\nsubject to\n";
  for (const Constraint& row : constraints_) {
    out << ' ';
    for (std::size_t j = 0; j < row.coefficients.size(); ++j) {
      if (row.coefficients[j] != 0) {
        out << ' ' << (row.coefficients[j] > 0 ? "+" : "")
            << row.coefficients[j].get_str() << '*' << variables_[j].name;
      }
    }
    switch (row.relation) {
      case Relation::kLessEqual:
        out << " <= ";
        break;
      case Relation::kEqual:
        out << " = ";
        break;
      case Relation::kGreaterEqual:
        out << " >= ";
        break;
    }
    out << row.rhs.get_str() << '\n';
  }
  out << "bounds\n";
  for (const Variable& v : variables_) {
    out << "  " << (v.lower ? v.lower->get_str() : "-inf") << " <= " << v.name
        << " <= " << (v.upper ? v.upper->get_str() : "+inf")
        << (v.integral ? " integer" : "") << '\n';
  }
  return out.str();
}

Rational evaluate_objective(const LinearProgram& program,
                            const std::vector<Rational>& values) {
  Rational total = 0;
  for (std::size_t j = 0; j < program.variable_count(); ++j) {
    total += program.objective()[j] * values.at(j);
  }
  return total;
}

bool is_feasible(const LinearProgram& program,
                 const std::vector<Rational>& values, bool require_integral) {
  if (values.size() != program.variable_count()) return false;
  for (std::size_t j = 0; j < values.size(); ++j) {
    const Variable& v = program.variables()[j];
    if (v.lower && values[j] < *v.lower) return false;
    if (v.upper && values[j] > *v.upper) return false;
    if (require_integral && v.integral && !is_integer(values[j])) return false;
  }
  for (const Constraint& row : program.constraints()) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < row.coefficients.size(); ++j) {
      lhs += row.coefficients[j] * values[j];
    }
    switch (row.relation) {
      case Relation::kLessEqual:
        if (lhs > row.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != row.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < row.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

// Original variable x = offset + sum(sign * y_col) over nonnegative columns.
struct ColumnMap {
  Rational offset;
  std::size_t column = 0;
  int sign = 1;
  std::optional<std::size_t> negative_column;  // free variables: x+ - x-
};

// Dense tableau over nonnegative columns in equality form.
class Tableau {
 public:
  Tableau(std::size_t columns) : columns_(columns) {}

  void add_row(std::vector<Rational> coeffs, Rational rhs, std::size_t basic) {
    coeffs.resize(columns_);
    coeffs.push_back(std::move(rhs));
    rows_.push_back(std::move(coeffs));
    basis_.push_back(basic);
  }

  std::size_t row_count() const { return rows_.size(); }
  std::size_t basic(std::size_t row) const { return basis_[row]; }
  const Rational& at(std::size_t row, std::size_t col) const {
    return rows_[row][col];
  }
  const Rational& rhs(std::size_t row) const { return rows_[row][columns_]; }

  void remove_row(std::size_t row) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

  // Installs a minimization objective and prices out the current basis.
  void set_cost(const std::vector<Rational>& cost) {
    cost_row_.assign(columns_ + 1, Rational(0));
    for (std::size_t j = 0; j < columns_; ++j) cost_row_[j] = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= columns_; ++j) {
        if (sgn(rows_[i][j]) != 0) cost_row_[j] -= cb * rows_[i][j];
      }
    }
  }

  // Objective value of the current basic solution.
  Rational value() const { return -cost_row_[columns_]; }

  void pivot(std::size_t row, std::size_t col) {
    std::vector<Rational>& prow = rows_[row];
    const Rational inv = 1 / prow[col];
    for (auto& entry : prow) {
      if (sgn(entry) != 0) entry *= inv;
    }
    auto eliminate = [&](std::vector<Rational>& target) {
      const Rational factor = target[col];
      if (sgn(factor) == 0) return;
      for (std::size_t j = 0; j <= columns_; ++j) {
        if (sgn(prow[j]) != 0) target[j] -= factor * prow[j];
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != row) eliminate(rows_[i]);
    }
    eliminate(cost_row_);
    basis_[row] = col;
  }

  // Bland's rule on columns allowed by `enterable`. Returns false when the
  // objective is unbounded below.
  template <typename Enterable>
  bool optimize(Enterable enterable) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < columns_; ++j) {
        if (enterable(j) && sgn(cost_row_[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][*entering];
        if (sgn(a) <= 0) continue;
        Rational ratio = rows_[i][columns_] / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  std::vector<Rational> basic_solution() const {
    std::vector<Rational> x(columns_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      x[basis_[i]] = rows_[i][columns_];
    }
    return x;
  }

 private:
  std::size_t columns_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_row_;
};

}  // namespace

Solution solve_lp(const LinearProgram& program) {
  Solution infeasible;
  infeasible.status = Status::kInfeasible;

  // Substitute bounds to reach x' >= 0 columns.
  const std::size_t n = program.variable_count();
  std::vector<ColumnMap> map(n);
  std::size_t structural = 0;
  struct BoundRow {
    std::size_t column;
    Rational limit;
  };
  std::vector<BoundRow> bound_rows;
  for (std::size_t j = 0; j < n; ++j) {
    const Variable& v = program.variables()[j];
    if (v.lower && v.upper && *v.lower > *v.upper) return infeasible;
    ColumnMap& cm = map[j];
    cm.column = structural++;
    if (v.lower) {
      cm.offset = *v.lower;
      if (v.upper) bound_rows.push_back({cm.column, *v.upper - *v.lower});
    } else if (v.upper) {
      cm.offset = *v.upper;
      cm.sign = -1;
    } else {
      cm.negative_column = structural++;
    }
  }

  struct Row {
    std::vector<Rational> coeffs;
    Relation relation;
    Rational rhs;
  };
  std::vector<Row> rows;
  for (const Constraint& c : program.constraints()) {
    Row row{std::vector<Rational>(structural, Rational(0)), c.relation, c.rhs};
    for (std::size_t j = 0; j < c.coefficients.size(); ++j) {
      const Rational& a = c.coefficients[j];
      if (sgn(a) == 0) continue;
      row.rhs -= a * map[j].offset;
      row.coeffs[map[j].column] += map[j].sign * a;
      if (map[j].negative_column) row.coeffs[*map[j].negative_column] -= a;
    }
    rows.push_back(std::move(row));
  }
  for (const BoundRow& b : bound_rows) {
    Row row{std::vector<Rational>(structural, Rational(0)),
            Relation::kLessEqual, b.limit};
    row.coeffs[b.column] = 1;
    rows.push_back(std::move(row));
  }

  // Normalize to rhs >= 0 and count auxiliary columns.
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (Row& row : rows) {
    if (sgn(row.rhs) < 0) {
      row.rhs = -row.rhs;
      for (auto& a : row.coeffs) a = -a;
      if (row.relation == Relation::kLessEqual) {
        row.relation = Relation::kGreaterEqual;
      } else if (row.relation == Relation::kGreaterEqual) {
        row.relation = Relation::kLessEqual;
      }
    }
    if (row.relation != Relation::kEqual) ++slack_count;
    if (row.relation != Relation::kLessEqual) ++artificial_count;
  }

  const std::size_t first_slack = structural;
  const std::size_t first_artificial = structural + slack_count;
  const std::size_t columns = first_artificial + artificial_count;
  Tableau tableau(columns);
  std::size_t next_slack = first_slack;
  std::size_t next_artificial = first_artificial;
  for (Row& row : rows) {
    std::vector<Rational> coeffs = std::move(row.coeffs);
    coeffs.resize(columns);
    std::size_t basic = 0;
    switch (row.relation) {
      case Relation::kLessEqual:
        coeffs[next_slack] = 1;
        basic = next_slack++;
        break;
      case Relation::kGreaterEqual:
        coeffs[next_slack++] = -1;
        coeffs[next_artificial] = 1;
        basic = next_artificial++;
        break;
      case Relation::kEqual:
        coeffs[next_artificial] = 1;
        basic = next_artificial++;
        break;
    }
    tableau.add_row(std::move(coeffs), std::move(row.rhs), basic);
  }

  auto is_artificial = [&](std::size_t col) { return col >= first_artificial; };

  // Phase I: minimize the sum of artificials.
  if (artificial_count > 0) {
    std::vector<Rational> phase1(columns, Rational(0));
    for (std::size_t j = first_artificial; j < columns; ++j) phase1[j] = 1;
    tableau.set_cost(phase1);
    tableau.optimize([](std::size_t) { return true; });
    if (sgn(tableau.value()) != 0) return infeasible;
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tableau.row_count();) {
      if (!is_artificial(tableau.basic(i))) {
        ++i;
        continue;
      }
      std::optional<std::size_t> replacement;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (sgn(tableau.at(i, j)) != 0) {
          replacement = j;
          break;
        }
      }
      if (replacement) {
        tableau.pivot(i, *replacement);
        ++i;
      } else {
        tableau.remove_row(i);
      }
    }
  }

  // Phase II on the real objective, minimization form.
  std::vector<Rational> cost(columns, Rational(0));
  const bool maximize = program.sense() == Sense::kMaximize;
  for (std::size_t j = 0; j < n; ++j) {
    Rational c = program.objective()[j];
    if (maximize) c = -c;
    if (sgn(c) == 0) continue;
    cost[map[j].column] += map[j].sign * c;
    if (map[j].negative_column) cost[*map[j].negative_column] -= c;
  }
  tableau.set_cost(cost);
  if (!tableau.optimize([&](std::size_t j) { return !is_artificial(j); })) {
    Solution unbounded;
    unbounded.status = Status::kUnbounded;
    return unbounded;
  }

  const std::vector<Rational> y = tableau.basic_solution();
  Solution solution;
  solution.status = Status::kOptimal;
  solution.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational x = map[j].offset + map[j].sign * y[map[j].column];
    if (map[j].negative_column) x -= y[*map[j].negative_column];
    solution.values[j] = std::move(x);
  }
  solution.objective_value = evaluate_objective(program, solution.values);
  return solution;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const LinearProgram& program, BranchAndBoundStats* stats)
      : maximize_(program.sense() == Sense::kMaximize), stats_(stats) {}

  void run(LinearProgram& node) {
    if (stats_) ++stats_->nodes;
    Solution relaxed = solve_lp(node);
    if (relaxed.status == Status::kInfeasible) return;
    if (relaxed.status == Status::kUnbounded) {
      // Integral variables are bounded, so the continuous part is unbounded.
      unbounded_ = true;
      return;
    }
    if (incumbent_ && !improves(relaxed.objective_value)) return;

    std::optional<std::size_t> branch;
    for (std::size_t j = 0; j < node.variable_count(); ++j) {
      if (!node.variables()[j].integral || is_integer(relaxed.values[j])) {
        continue;
      }
      if (!branch || relaxed.values[j].get_den() >
                         relaxed.values[*branch].get_den()) {
        branch = j;
      }
    }
    if (!branch) {
      incumbent_ = std::move(relaxed);
      return;
    }

    const std::size_t j = *branch;
    const Variable saved = node.variables()[j];
    const Rational down(floor_of(relaxed.values[j]));
    const Rational up(ceil_of(relaxed.values[j]));
    node.set_bounds(j, saved.lower, down);
    run(node);
    if (unbounded_) return;
    node.set_bounds(j, up, saved.upper);
    run(node);
    node.set_bounds(j, saved.lower, saved.upper);
  }

  Solution result(const LinearProgram& program) const {
    Solution out;
    if (unbounded_) {
      out.status = Status::kUnbounded;
    } else if (incumbent_) {
      out = *incumbent_;
      out.objective_value = evaluate_objective(program, out.values);
    } else {
      out.status = Status::kInfeasible;
    }
    return out;
  }

 private:
  bool improves(const Rational& value) const {
    return maximize_ ? value > incumbent_->objective_value
                     : value < incumbent_->objective_value;
  }

  bool maximize_;
  BranchAndBoundStats* stats_;
  std::optional<Solution> incumbent_;
  bool unbounded_ = false;
};

}  // namespace

Solution solve_ilp(const LinearProgram& program, BranchAndBoundStats* stats) {
  for (const Variable& v : program.variables()) {
    if (v.integral && (!v.lower || !v.upper)) {
      throw GuardViolation("integral variable '" + v.name +
                           "' needs finite bounds");
    }
  }
  LinearProgram node = program;
  BranchAndBound search(program, stats);
  search.run(node);
  return search.result(program);
}

}  // namespace votescore::lp
