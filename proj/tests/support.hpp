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

// Test-only helpers: seeded instance generators and small oracles written
// straight from the definitions, sharing no code with the library.

#ifndef VOTESCORE_TESTS_SUPPORT_HPP_
#define VOTESCORE_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "votescore/lp.hpp"
#include "votescore/profile.hpp"
#include "votescore/reductions.hpp"

namespace testing {

using Orders = std::vector<std::vector<std::size_t>>;

inline std::vector<std::string> letters(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.emplace_back(1, char('A' + i));
  return names;
}

// Profile with m candidates and exactly n voters; neighbouring voters are
// sometimes merged into one ballot so multiplicities get exercised.
inline votescore::Profile random_profile(std::mt19937_64& rng, std::size_t m,
                                         std::uint64_t n) {
  std::vector<votescore::Ballot> ballots;
  std::vector<std::size_t> order(m);
  std::uint64_t left = n;
  while (left > 0) {
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::uint64_t mult = (left > 1 && rng() % 4 == 0) ? 2 : 1;
    ballots.push_back({order, mult});
    left -= mult;
  }
  return votescore::Profile(letters(m), std::move(ballots));
}

inline Orders expand(const votescore::Profile& p) {
  Orders out;
  for (std::uint64_t v = 0; v < p.voter_count(); ++v) {
    out.push_back(p.order_of(v));
  }
  return out;
}

inline bool is_condorcet(const Orders& orders, std::size_t m, std::size_t c) {
  if (orders.empty()) return false;
  for (std::size_t k = 0; k < m; ++k) {
    if (k == c) continue;
    std::size_t wins = 0;
    for (const auto& o : orders) {
      auto pc = std::find(o.begin(), o.end(), c);
      auto pk = std::find(o.begin(), o.end(), k);
      if (pc < pk) ++wins;
    }
    if (2 * wins <= orders.size()) return false;
  }
  return true;
}

// Minimum adjacent swaps: only swaps that move c upward can help, so try
// every combination of per-voter lift distances.
inline std::uint64_t oracle_dodgson(const Orders& orders, std::size_t m,
                                    std::size_t c) {
  const std::size_t n = orders.size();
  std::vector<std::size_t> pos(n), lift(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    pos[i] = std::find(orders[i].begin(), orders[i].end(), c) -
             orders[i].begin();
  }
  std::uint64_t best = UINT64_MAX;
  while (true) {
    Orders moved = orders;
    std::uint64_t cost = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto first = moved[i].begin() + (pos[i] - lift[i]);
      std::rotate(first, moved[i].begin() + pos[i],
                  moved[i].begin() + pos[i] + 1);
      cost += lift[i];
    }
    if (cost < best && is_condorcet(moved, m, c)) best = cost;
    std::size_t i = 0;
    while (i < n && lift[i] == pos[i]) lift[i++] = 0;
    if (i == n) break;
    ++lift[i];
  }
  return best;
}

inline std::uint64_t oracle_young(const Orders& orders, std::size_t m,
                                  std::size_t c) {
  const std::size_t n = orders.size();
  std::uint64_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::uint64_t>(std::popcount(mask));
    if (size <= best) continue;
    Orders kept;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) kept.push_back(orders[i]);
    }
    if (is_condorcet(kept, m, c)) best = size;
  }
  return best;
}

inline std::size_t oracle_alpha(const votescore::Graph& g) {
  const std::size_t n = g.vertices().size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const auto& [u, v] : g.edges()) {
      if ((mask >> u & 1) && (mask >> v & 1)) independent = false;
    }
    if (independent) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

inline std::size_t oracle_kappa(const votescore::SetFamily& s) {
  const std::size_t n = s.sets().size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> used(s.base().size(), 0);
    bool disjoint = true;
    for (std::size_t i = 0; i < n && disjoint; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t e : s.sets()[i]) {
        if (used[e]++) disjoint = false;
      }
    }
    if (disjoint) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

// Random graph on `n` vertices with no isolated vertex.
inline votescore::Graph random_graph(std::mt19937_64& rng, std::size_t n,
                                     unsigned density_percent) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<bool> touched(n, false);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng() % 100 < density_percent) {
        edges.emplace_back(u, v);
        touched[u] = touched[v] = true;
      }
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (touched[u]) continue;
    std::size_t v = (u + 1 + rng() % (n - 1)) % n;
    auto e = std::minmax(u, v);
    if (std::find(edges.begin(), edges.end(), std::pair(e.first, e.second)) ==
        edges.end()) {
      edges.emplace_back(e.first, e.second);
    }
    touched[u] = touched[v] = true;
  }
  return votescore::Graph(std::move(names), std::move(edges));
}

// Best objective over the integer grid spanned by the variable bounds, or
// nullopt when no grid point is feasible. Rows and objective are scaled to
// integers and updated incrementally while the grid is walked.
inline std::optional<votescore::Rational> grid_optimum(
    const votescore::lp::LinearProgram& program) {
  using votescore::Rational;
  using votescore::lp::Relation;
  const auto& vars = program.variables();
  const std::size_t n = vars.size();
  auto scaled = [n](const std::vector<Rational>& coeffs, const Rational& rhs,
                    std::vector<long long>& out, long long& out_rhs) {
    mpz_class scale = rhs.get_den();
    for (std::size_t j = 0; j < n && j < coeffs.size(); ++j) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
              coeffs[j].get_den_mpz_t());
    }
    out.assign(n, 0);
    for (std::size_t j = 0; j < n && j < coeffs.size(); ++j) {
      out[j] = mpz_class(coeffs[j] * scale).get_si();
    }
    out_rhs = mpz_class(rhs * scale).get_si();
    return scale;
  };
  struct Row {
    std::vector<long long> a;
    long long rhs;
    Relation relation;
    long long lhs = 0;
  };
  std::vector<long> lo, hi, x;
  for (const auto& v : vars) {
    lo.push_back(v.lower->get_num().get_si());
    hi.push_back(v.upper->get_num().get_si());
  }
  x = lo;
  std::vector<Row> rows;
  for (const auto& c : program.constraints()) {
    Row row;
    scaled(c.coefficients, c.rhs, row.a, row.rhs);
    row.relation = c.relation;
    for (std::size_t j = 0; j < n; ++j) row.lhs += row.a[j] * x[j];
    rows.push_back(std::move(row));
  }
  std::vector<long long> obj;
  long long unused = 0;
  const mpz_class obj_scale = scaled(program.objective(), Rational(0), obj,
                                     unused);
  long long value = 0;
  for (std::size_t j = 0; j < n; ++j) value += obj[j] * x[j];

  std::optional<long long> best;
  const bool maximize = program.sense() == votescore::lp::Sense::kMaximize;
  while (true) {
    bool feasible = true;
    for (const Row& r : rows) {
      if ((r.relation == Relation::kLessEqual && r.lhs > r.rhs) ||
          (r.relation == Relation::kGreaterEqual && r.lhs < r.rhs) ||
          (r.relation == Relation::kEqual && r.lhs != r.rhs)) {
        feasible = false;
        break;
      }
    }
    if (feasible && (!best || (maximize ? value > *best : value < *best))) {
      best = value;
    }
    std::size_t i = 0;
    while (i < n && x[i] == hi[i]) {
      const long long back = hi[i] - lo[i];
      for (Row& r : rows) r.lhs -= r.a[i] * back;
      value -= obj[i] * back;
      x[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
    for (Row& r : rows) r.lhs += r.a[i];
    value += obj[i];
  }
  if (!best) return std::nullopt;
  Rational out(mpz_class(static_cast<long>(*best)), obj_scale);
  out.canonicalize();
  return out;
}

}  // namespace testing

#endif  // VOTESCORE_TESTS_SUPPORT_HPP_
