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

#include "votescore/reductions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "text_util.hpp"
#include "votescore/error.hpp"
#include "votescore/exact_scores.hpp"
#include "votescore/star_scores.hpp"

namespace votescore {
namespace {

std::map<std::string, std::size_t> index_names(
    const std::vector<std::string>& names, const char* what) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!text::valid_name(names[i])) {
      throw Error(std::string("invalid ") + what + " name '" + names[i] + "'");
    }
    if (!index.emplace(names[i], i).second) {
      throw Error(std::string("duplicate ") + what + " '" + names[i] + "'");
    }
  }
  return index;
}

// Splits "keyword: a b c" into its keyword and tokens.
std::pair<std::string_view, std::vector<std::string_view>> keyword_line(
    const text::Line& line) {
  const auto colon = line.text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError(line.number, "expected '<keyword>: ...'");
  }
  return {text::trim(line.text.substr(0, colon)),
          text::split_whitespace(line.text.substr(colon + 1))};
}

}  // namespace

Graph::Graph(std::vector<std::string> vertices,
             std::vector<std::pair<VertexIndex, VertexIndex>> edges)
    : vertices_(std::move(vertices)) {
  index_names(vertices_, "vertex");
  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  for (auto [u, v] : edges) {
    if (u >= vertices_.size() || v >= vertices_.size()) {
      throw Error("edge endpoint out of range");
    }
    if (u == v) throw Error("loop at vertex '" + vertices_[u] + "'");
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) {
      throw Error("repeated edge " + vertices_[u] + " " + vertices_[v]);
    }
    edges_.emplace_back(u, v);
  }
}

std::size_t Graph::degree(VertexIndex v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(),
                    [v](const auto& e) { return e.first == v || e.second == v; }));
}

SetFamily::SetFamily(std::vector<std::string> base,
                     std::vector<std::vector<std::size_t>> sets)
    : base_(std::move(base)), sets_(std::move(sets)) {
  index_names(base_, "ground element");
  for (auto& member : sets_) {
    if (member.empty()) throw Error("member sets must be nonempty");
    std::sort(member.begin(), member.end());
    if (std::adjacent_find(member.begin(), member.end()) != member.end()) {
      throw Error("member set repeats an element");
    }
    if (member.back() >= base_.size()) {
      throw Error("member set element out of range");
    }
  }
}

Graph parse_graph(std::string_view input) {
  std::optional<std::vector<std::string>> vertices;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (const text::Line& line : text::content_lines(input)) {
    auto [keyword, tokens] = keyword_line(line);
    if (!vertices) {
      if (keyword != "vertices") {
        throw ParseError(line.number, "first line must be 'vertices: ...'");
      }
      vertices.emplace(tokens.begin(), tokens.end());
      try {
        index = index_names(*vertices, "vertex");
      } catch (const Error& e) {
        throw ParseError(line.number, e.what());
      }
      continue;
    }
    if (keyword != "edge" || tokens.size() != 2) {
      throw ParseError(line.number, "expected 'edge: <u> <v>'");
    }
    std::pair<VertexIndex, VertexIndex> edge;
    for (int end = 0; end < 2; ++end) {
      auto it = index.find(std::string(tokens[end]));
      if (it == index.end()) {
        throw ParseError(line.number,
                         "unknown vertex '" + std::string(tokens[end]) + "'");
      }
      (end == 0 ? edge.first : edge.second) = it->second;
    }
    if (edge.first == edge.second) {
      throw ParseError(line.number, "loop edges are not allowed");
    }
    const auto normalized = std::minmax(edge.first, edge.second);
    for (const auto& [u, v] : edges) {
      if (std::minmax(u, v) == normalized) {
        throw ParseError(line.number, "repeated edge");
      }
    }
    edges.push_back(edge);
  }
  if (!vertices) throw ParseError(0, "missing 'vertices:' line");
  return Graph(std::move(*vertices), std::move(edges));
}

std::string serialize_graph(const Graph& graph) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& v : graph.vertices()) out << ' ' << v;
  out << '\n';
  for (const auto& [u, v] : graph.edges()) {
    out << "edge: " << graph.vertices()[u] << ' ' << graph.vertices()[v]
        << '\n';
  }
  return out.str();
}

SetFamily parse_set_family(std::string_view input) {
  std::optional<std::vector<std::string>> base;
  std::map<std::string, std::size_t> index;
  std::vector<std::vector<std::size_t>> sets;
  for (const text::Line& line : text::content_lines(input)) {
    auto [keyword, tokens] = keyword_line(line);
    if (!base) {
      if (keyword != "base") {
        throw ParseError(line.number, "first line must be 'base: ...'");
      }
      base.emplace(tokens.begin(), tokens.end());
      try {
        index = index_names(*base, "ground element");
      } catch (const Error& e) {
        throw ParseError(line.number, e.what());
      }
      continue;
    }
    if (keyword != "set") throw ParseError(line.number, "expected 'set: ...'");
    if (tokens.empty()) {
      throw ParseError(line.number, "member sets must be nonempty");
    }
    std::vector<std::size_t> member;
    for (std::string_view token : tokens) {
      auto it = index.find(std::string(token));
      if (it == index.end()) {
        throw ParseError(line.number,
                         "unknown element '" + std::string(token) + "'");
      }
      if (std::find(member.begin(), member.end(), it->second) != member.end()) {
        throw ParseError(line.number,
                         "element '" + std::string(token) + "' repeated");
      }
      member.push_back(it->second);
    }
    sets.push_back(std::move(member));
  }
  if (!base) throw ParseError(0, "missing 'base:' line");
  return SetFamily(std::move(*base), std::move(sets));
}

std::string serialize_set_family(const SetFamily& family) {
  std::ostringstream out;
  out << "base:";
  for (const auto& e : family.base()) out << ' ' << e;
  out << '\n';
  for (const auto& member : family.sets()) {
    out << "set:";
    for (std::size_t e : member) out << ' ' << family.base()[e];
    out << '\n';
  }
  return out.str();
}

namespace {

// Maximum independent set within `candidates`, branching on the lowest
// vertex: either take it (dropping its neighbours) or discard it.
std::size_t independent_set_size(std::uint64_t candidates,
                                 const std::vector<std::uint64_t>& neighbors) {
  if (candidates == 0) return 0;
  const int v = std::countr_zero(candidates);
  const std::uint64_t without = candidates & ~(std::uint64_t{1} << v);
  // A vertex with no remaining neighbours is always safe to take.
  if ((neighbors[v] & without) == 0) {
    return 1 + independent_set_size(without, neighbors);
  }
  const std::size_t take =
      1 + independent_set_size(without & ~neighbors[v], neighbors);
  if (take >= static_cast<std::size_t>(std::popcount(without))) return take;
  return std::max(take, independent_set_size(without, neighbors));
}

void pack(const SetFamily& family, std::size_t next, std::vector<bool>& used,
          std::size_t chosen, std::size_t& best) {
  if (chosen + (family.sets().size() - next) <= best) return;
  if (next == family.sets().size()) {
    best = chosen;
    return;
  }
  const auto& member = family.sets()[next];
  const bool fits = std::none_of(member.begin(), member.end(),
                                 [&](std::size_t e) { return used[e]; });
  if (fits) {
    for (std::size_t e : member) used[e] = true;
    pack(family, next + 1, used, chosen + 1, best);
    for (std::size_t e : member) used[e] = false;
  }
  pack(family, next + 1, used, chosen, best);
}

}  // namespace

std::size_t alpha(const Graph& graph, std::size_t max_vertices) {
  const std::size_t n = graph.vertices().size();
  if (n > max_vertices || n > 64) {
    throw GuardViolation("independence number capped at " +
                         std::to_string(std::min<std::size_t>(max_vertices, 64)) +
                         " vertices");
  }
  std::vector<std::uint64_t> neighbors(n, 0);
  for (const auto& [u, v] : graph.edges()) {
    neighbors[u] |= std::uint64_t{1} << v;
    neighbors[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t all =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return independent_set_size(all, neighbors);
}

std::size_t kappa(const SetFamily& family, std::size_t max_sets) {
  if (family.sets().size() > max_sets) {
    throw GuardViolation("set packing capped at " + std::to_string(max_sets) +
                         " member sets");
  }
  std::vector<bool> used(family.base().size(), false);
  std::size_t best = 0;
  pack(family, 0, used, 0, best);
  return best;
}

SetFamily incidence_family(const Graph& graph) {
  std::vector<std::string> base;
  for (const auto& [u, v] : graph.edges()) {
    base.push_back(graph.vertices()[u] + "-" + graph.vertices()[v]);
  }
  std::vector<std::vector<std::size_t>> sets(graph.vertices().size());
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    sets[graph.edges()[e].first].push_back(e);
    sets[graph.edges()[e].second].push_back(e);
  }
  for (std::size_t v = 0; v < sets.size(); ++v) {
    if (sets[v].empty()) {
      throw GuardViolation("isolated vertex '" + graph.vertices()[v] +
                           "' would produce an empty member set");
    }
  }
  return SetFamily(std::move(base), std::move(sets));
}

MspcInstance inc_to_mspc(const Graph& first, const Graph& second) {
  return {incidence_family(first), incidence_family(second)};
}

YoungReduction mspc_to_young_ranking(const MspcInstance& instance,
                                     std::size_t max_sets) {
  const SetFamily& s1 = instance.first;
  const SetFamily& s2 = instance.second;
  if (s1.sets().empty() || s2.sets().empty()) {
    throw GuardViolation("set families must be nonempty");
  }
  if (kappa(s1, max_sets) <= 2 || kappa(s2, max_sets) <= 2) {
    throw GuardViolation("both packing numbers must exceed 2");
  }

  // Candidate layout: c, d, x_*, y_*, a, b.
  std::vector<std::string> names{"c", "d"};
  const CandidateIndex first_x = names.size();
  for (const auto& e : s1.base()) names.push_back("x_" + e);
  const CandidateIndex first_y = names.size();
  for (const auto& e : s2.base()) names.push_back("y_" + e);
  YoungReduction out{Profile({"c"}, {}, true), 0, 0, 0, 0, {}, {}, {}};
  out.c = 0;
  out.d = 1;
  out.a = names.size();
  names.push_back("a");
  out.b = names.size();
  names.push_back("b");

  using Order = std::vector<CandidateIndex>;
  auto block = [](CandidateIndex offset, const std::vector<std::size_t>& ids) {
    Order o;
    for (std::size_t i : ids) o.push_back(offset + i);
    return o;
  };
  auto all_of = [](CandidateIndex offset, std::size_t count) {
    Order o;
    for (std::size_t i = 0; i < count; ++i) o.push_back(offset + i);
    return o;
  };
  auto complement = [](const std::vector<std::size_t>& member,
                       std::size_t size) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < size; ++i) {
      if (!std::binary_search(member.begin(), member.end(), i)) {
        rest.push_back(i);
      }
    }
    return rest;
  };
  auto concat = [](std::initializer_list<Order> parts) {
    Order o;
    for (const Order& p : parts) o.insert(o.end(), p.begin(), p.end());
    return o;
  };
  const Order b1 = all_of(first_x, s1.base().size());
  const Order b2 = all_of(first_y, s2.base().size());
  const Order c{out.c}, d{out.d}, a{out.a}, b{out.b};

  std::vector<Ballot> ballots;
  std::uint64_t voter = 0;
  auto add = [&](Order order, std::uint64_t multiplicity, VoterForm form) {
    ballots.push_back({std::move(order), multiplicity});
    out.forms.insert(out.forms.end(), multiplicity, form);
    voter += multiplicity;
  };

  for (const auto& member : s1.sets()) {
    out.first_set_voter.push_back(voter);
    add(concat({block(first_x, member), a, c,
                block(first_x, complement(member, s1.base().size())), b2, b,
                d}),
        1, VoterForm::kFirstMember);
  }
  add(concat({c, b1, a, b2, b, d}), 2, VoterForm::kFirstLeader);
  add(concat({b1, c, a, b2, b, d}), s1.sets().size() - 1,
      VoterForm::kFirstFiller);
  for (const auto& member : s2.sets()) {
    out.second_set_voter.push_back(voter);
    add(concat({block(first_y, member), b, d,
                block(first_y, complement(member, s2.base().size())), b1, a,
                c}),
        1, VoterForm::kSecondMember);
  }
  add(concat({d, b2, b, b1, a, c}), 2, VoterForm::kSecondLeader);
  add(concat({b2, d, b, b1, a, c}), s2.sets().size() - 1,
      VoterForm::kSecondFiller);

  out.profile = Profile(std::move(names), std::move(ballots));
  return out;
}

Amplification amplify_for_winner(const Profile& profile, CandidateIndex c,
                                 CandidateIndex d, bool allow_single_voter) {
  const std::size_t m = profile.candidate_count();
  if (c >= m) throw UnknownCandidate("#" + std::to_string(c));
  if (d >= m) throw UnknownCandidate("#" + std::to_string(d));
  if (c == d) throw GuardViolation("designated candidates must differ");
  const std::uint64_t n = profile.voter_count();
  if (n < 2 && !allow_single_voter) {
    throw GuardViolation("amplification needs at least two voters");
  }
  if (m == 2) return {profile, c, d, {}};

  // New candidate list in original order; g expands in place to g^0..g^{n-1}.
  std::vector<std::string> names;
  std::vector<CandidateIndex> first_copy(m);
  Amplification out{Profile({"c"}, {}, true), 0, 0, {}};
  for (CandidateIndex g = 0; g < m; ++g) {
    first_copy[g] = names.size();
    if (g == c || g == d) {
      if (g == c) out.c = names.size();
      if (g == d) out.d = names.size();
      names.push_back(profile.name(g));
      continue;
    }
    for (std::uint64_t k = 0; k < n; ++k) {
      out.replaced.push_back(names.size());
      names.push_back(profile.name(g) + "^" + std::to_string(k));
    }
  }
  {
    std::set<std::string> unique(names.begin(), names.end());
    if (unique.size() != names.size()) {
      throw GuardViolation("amplified candidate names collide");
    }
  }

  std::vector<Ballot> ballots;
  for (std::uint64_t i = 0; i < n; ++i) {
    std::vector<CandidateIndex> order;
    for (CandidateIndex g : profile.order_of(i)) {
      if (g == c || g == d) {
        order.push_back(first_copy[g]);
        continue;
      }
      for (std::uint64_t step = 0; step < n; ++step) {
        order.push_back(first_copy[g] + (i + step) % n);
      }
    }
    ballots.push_back({std::move(order), 1});
  }
  out.profile = Profile(std::move(names), std::move(ballots));
  return out;
}

bool ChainReport::consistent() const {
  if (!postconditions_hold) return false;
  if (alpha_compare != kappa_compare || kappa_compare != young_ranking) {
    return false;
  }
  return !young_winner || *young_winner == young_ranking;
}

ChainReport verify_reduction_chain(const Graph& first, const Graph& second,
                                   const ChainOptions& options) {
  ChainReport report;
  report.alpha_first = alpha(first, options.max_vertices);
  report.alpha_second = alpha(second, options.max_vertices);
  const MspcInstance mspc = inc_to_mspc(first, second);
  report.kappa_first = kappa(mspc.first, options.max_vertices);
  report.kappa_second = kappa(mspc.second, options.max_vertices);
  report.alpha_compare = report.alpha_first >= report.alpha_second;
  report.kappa_compare = report.kappa_first >= report.kappa_second;
  if (report.alpha_first != report.kappa_first ||
      report.alpha_second != report.kappa_second) {
    report.postconditions_hold = false;
    report.notes.push_back("alpha differs from kappa");
  }

  const YoungReduction young = mspc_to_young_ranking(mspc, options.max_vertices);
  const Profile& profile = young.profile;
  report.voters = profile.voter_count();
  report.candidates = profile.candidate_count();
  report.young_c = young_score(profile, young.c).score;
  report.young_d = young_score(profile, young.d).score;
  report.young_ranking = report.young_c >= report.young_d;
  if (report.young_c != 2 * report.kappa_first + 1 ||
      report.young_d != 2 * report.kappa_second + 1) {
    report.postconditions_hold = false;
    report.notes.push_back("Young scores differ from 2 kappa + 1");
  }
  if (report.voters <= options.bruteforce_voter_cap) {
    const auto bc = young_score_bruteforce(profile, young.c, report.voters);
    const auto bd = young_score_bruteforce(profile, young.d, report.voters);
    if (bc.score != report.young_c || bd.score != report.young_d) {
      report.postconditions_hold = false;
      report.notes.push_back("Young program disagrees with enumeration");
    }
  } else {
    report.notes.push_back("Young scores not cross-checked by enumeration (" +
                           std::to_string(report.voters) + " voters > " +
                           std::to_string(options.bruteforce_voter_cap) + ")");
  }

  if (report.voters > options.winner_voter_cap) {
    report.notes.push_back("Young winner stage skipped (" +
                           std::to_string(report.voters) + " voters > " +
                           std::to_string(options.winner_voter_cap) + ")");
    return report;
  }
  const Amplification amplified =
      amplify_for_winner(profile, young.c, young.d);
  const Profile& wide = amplified.profile;
  const std::uint64_t c_score = young_score(wide, amplified.c).score;
  const std::uint64_t d_score = young_score(wide, amplified.d).score;
  if (c_score != report.young_c || d_score != report.young_d) {
    report.postconditions_hold = false;
    report.notes.push_back("amplification changed the scores of c or d");
  }
  bool c_wins = c_score >= d_score;
  for (CandidateIndex h : amplified.replaced) {
    // The weighted relaxation bounds every Young score from above, which
    // settles most replaced candidates without an integer program.
    const Rational bound = young_star_relaxation(wide, h);
    if (bound < 2) continue;
    const std::uint64_t h_score = young_score(wide, h).score;
    if (h_score > 1) {
      report.postconditions_hold = false;
      report.notes.push_back("replaced candidate " + wide.name(h) +
                             " scores above 1");
    }
    if (h_score > c_score) c_wins = false;
  }
  report.young_winner = c_wins;
  return report;
}

}  // namespace votescore
