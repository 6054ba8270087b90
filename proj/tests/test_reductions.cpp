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

#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "support.hpp"
#include "votescore/error.hpp"
#include "votescore/exact_scores.hpp"
#include "votescore/profile.hpp"
#include "votescore/reductions.hpp"

using namespace votescore;

namespace {

const char* kSingletons = "base: 1 2 3\nset: 1\nset: 2\nset: 3\n";

Graph path3() {
  return parse_graph("vertices: a b c\nedge: a b\nedge: b c\n");
}

}  // namespace

TEST_CASE("graph and set family parsing") {
  const Graph g = parse_graph("# comment\nvertices: a b c\nedge: b a\n");
  REQUIRE(g.edges().size() == 1);
  CHECK(g.edges()[0] == std::pair<VertexIndex, VertexIndex>{0, 1});
  CHECK(g.degree(2) == 0);
  CHECK(parse_graph(serialize_graph(g)).edges() == g.edges());
  CHECK_THROWS_AS(parse_graph("vertices: a b\nedge: a a\n"), Error);
  CHECK_THROWS_AS(parse_graph("vertices: a b\nedge: a b\nedge: b a\n"), Error);
  CHECK_THROWS_AS(parse_graph("vertices: a b\nedge: a z\n"), Error);
  CHECK_THROWS_AS(parse_graph("edge: a b\n"), Error);

  const SetFamily s = parse_set_family("base: x y z\nset: z x\nset: y\n");
  CHECK(s.sets()[0] == std::vector<std::size_t>{0, 2});
  CHECK(serialize_set_family(s) == "base: x y z\nset: x z\nset: y\n");
  CHECK_THROWS_AS(parse_set_family("base: x\nset:\n"), Error);
  CHECK_THROWS_AS(parse_set_family("base: x\nset: q\n"), Error);
}

TEST_CASE("alpha examples") {
  CHECK(alpha(parse_graph("vertices: a b c\nedge: a b\nedge: b c\nedge: a c\n")) ==
        1);
  CHECK(alpha(path3()) == 2);
  CHECK(alpha(parse_graph("vertices: a b c d\n")) == 4);
  CHECK_THROWS_AS(alpha(path3(), 2), GuardViolation);
}

TEST_CASE("kappa examples") {
  CHECK(kappa(parse_set_family(kSingletons)) == 3);
  CHECK(kappa(parse_set_family("base: x\nset: x\n")) == 1);
  CHECK(kappa(parse_set_family(
            "base: x1 x2 x3 x4\nset: x1 x2\nset: x2 x3\nset: x3 x4\n")) == 2);
  CHECK_THROWS_AS(kappa(parse_set_family(kSingletons), 2), GuardViolation);
}

TEST_CASE("alpha and kappa match enumeration") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_graph(rng, 2 + rng() % 9, 20 + rng() % 50);
    CHECK(alpha(g) == testing::oracle_alpha(g));
    const SetFamily s = incidence_family(g);
    CHECK(kappa(s) == testing::oracle_kappa(s));
  }
}

TEST_CASE("incidence families") {
  const SetFamily k3 = incidence_family(
      parse_graph("vertices: a b c\nedge: a b\nedge: b c\nedge: a c\n"));
  CHECK(k3.sets().size() == 3);
  for (const auto& s : k3.sets()) CHECK(s.size() == 2);
  CHECK(kappa(k3) == 1);

  const SetFamily p3 = incidence_family(path3());
  CHECK(p3.base() == std::vector<std::string>{"a-b", "b-c"});
  CHECK(p3.sets() ==
        std::vector<std::vector<std::size_t>>{{0}, {0, 1}, {1}});
  CHECK(kappa(p3) == 2);

  const SetFamily edge = incidence_family(parse_graph("vertices: u v\nedge: u v\n"));
  CHECK(edge.sets() == std::vector<std::vector<std::size_t>>{{0}, {0}});
  CHECK(kappa(edge) == 1);

  CHECK_THROWS_AS(incidence_family(parse_graph("vertices: a b c\nedge: a b\n")),
                  GuardViolation);
  CHECK_THROWS_AS(inc_to_mspc(path3(), parse_graph("vertices: a b c\nedge: a b\n")),
                  GuardViolation);
}

TEST_CASE("three-singleton reduction profile") {
  const SetFamily s = parse_set_family(kSingletons);
  const YoungReduction r = mspc_to_young_ranking({s, s});
  const Profile& p = r.profile;
  CHECK(p.voter_count() == 14);
  CHECK(p.candidate_count() == 10);
  CHECK(p.name(r.c) == "c");
  CHECK(p.name(r.d) == "d");
  CHECK(p.name(r.a) == "a");
  CHECK(p.name(r.b) == "b");
  std::map<VoterForm, int> count;
  for (VoterForm f : r.forms) ++count[f];
  CHECK(count[VoterForm::kFirstMember] == 3);
  CHECK(count[VoterForm::kFirstLeader] == 2);
  CHECK(count[VoterForm::kFirstFiller] == 2);
  CHECK(count[VoterForm::kSecondMember] == 3);
  CHECK(count[VoterForm::kSecondLeader] == 2);
  CHECK(count[VoterForm::kSecondFiller] == 2);
  // form (1) for E = {1}: x_1 > a > c > x_2 > x_3 > y_1 > y_2 > y_3 > b > d
  const auto& first = p.order_of(r.first_set_voter[0]);
  std::vector<std::string> names;
  for (CandidateIndex c : first) names.push_back(p.name(c));
  CHECK(names == std::vector<std::string>{"x_1", "a", "c", "x_2", "x_3", "y_1",
                                          "y_2", "y_3", "b", "d"});
  CHECK(young_score_bruteforce(p, r.c).score == 7);
  CHECK(young_score_bruteforce(p, r.d).score == 7);
}

TEST_CASE("reduction guards") {
  const SetFamily two = parse_set_family("base: 1 2\nset: 1\nset: 2\n");
  const SetFamily three = parse_set_family(kSingletons);
  CHECK_THROWS_AS(mspc_to_young_ranking({two, three}), GuardViolation);
  CHECK_THROWS_AS(mspc_to_young_ranking({three, two}), GuardViolation);
}

TEST_CASE("Young scores equal 2 kappa + 1 with the packing-shaped witness") {
  const SetFamily four =
      parse_set_family("base: 1 2 3 4 5\nset: 1\nset: 2\nset: 3\nset: 4 5\nset: 1 5\n");
  const SetFamily three = parse_set_family(
      "base: p q r s\nset: p q\nset: r\nset: s\nset: q r\n");
  REQUIRE(kappa(four) == 4);
  REQUIRE(kappa(three) == 3);
  const YoungReduction r = mspc_to_young_ranking({four, three});
  const auto yc = young_score(r.profile, r.c);
  const auto yd = young_score(r.profile, r.d);
  CHECK(yc.score == 9);
  CHECK(yd.score == 7);
  CHECK(young_score_bruteforce(r.profile, r.c).score == 9);
  CHECK(young_score_bruteforce(r.profile, r.d).score == 7);
  CHECK(young_ranking(r.profile, r.c, r.d));
  CHECK_FALSE(young_ranking(r.profile, r.d, r.c));

  // kappa + 1 voters of forms (2)/(3), kappa of form (1) with disjoint sets,
  // nothing from the second family
  std::map<VoterForm, int> count;
  for (auto v : yc.kept) ++count[r.forms[v]];
  CHECK(count[VoterForm::kFirstLeader] + count[VoterForm::kFirstFiller] == 5);
  CHECK(count[VoterForm::kFirstMember] == 4);
  CHECK(count[VoterForm::kSecondMember] + count[VoterForm::kSecondLeader] +
            count[VoterForm::kSecondFiller] ==
        0);
  std::set<std::size_t> used;
  std::size_t members = 0;
  for (std::size_t s = 0; s < four.sets().size(); ++s) {
    const auto v = r.first_set_voter[s];
    if (std::find(yc.kept.begin(), yc.kept.end(), v) == yc.kept.end()) continue;
    for (std::size_t e : four.sets()[s]) {
      CHECK(used.insert(e).second);
      ++members;
    }
  }
  CHECK(members == used.size());
}

TEST_CASE("amplification keeps c and d and flattens everyone else") {
  const Profile p = parse_profile(
      "candidates: c d g\nvoter: c > g > d\nvoter: g > d > c\nvoter: d > c > g\n");
  const Amplification a =
      amplify_for_winner(p, p.index_of("c"), p.index_of("d"));
  const Profile& w = a.profile;
  CHECK(w.candidates() ==
        std::vector<std::string>{"c", "d", "g^0", "g^1", "g^2"});
  CHECK(w.voter_count() == 3);
  CHECK(a.replaced.size() == 3);
  // voter 1 (0-based) starts its block at g^1
  std::vector<std::string> second;
  for (CandidateIndex c : w.order_of(1)) second.push_back(w.name(c));
  CHECK(second == std::vector<std::string>{"g^1", "g^2", "g^0", "d", "c"});
  CHECK(young_score_bruteforce(w, a.c).score ==
        young_score_bruteforce(p, p.index_of("c")).score);
  CHECK(young_score_bruteforce(w, a.d).score ==
        young_score_bruteforce(p, p.index_of("d")).score);
  for (CandidateIndex h : a.replaced) {
    CHECK(young_score_bruteforce(w, h).score <= 1);
  }
}

TEST_CASE("amplification edge cases") {
  const Profile two = parse_profile("candidates: c d\nvoter: c > d\nvoter: d > c\n");
  CHECK(amplify_for_winner(two, 0, 1).profile == two);
  const Profile one = parse_profile("candidates: c d g\nvoter: g > c > d\n");
  CHECK_THROWS_AS(amplify_for_winner(one, 0, 1), GuardViolation);
  const Amplification single = amplify_for_winner(one, 0, 1, true);
  CHECK(single.profile.candidates() ==
        std::vector<std::string>{"c", "d", "g^0"});
  CHECK_THROWS_AS(amplify_for_winner(two, 0, 0), Error);
}

TEST_CASE("reduction chain verification") {
  const Graph paths = parse_graph(
      "vertices: 1 2 3 4 5 6\nedge: 1 2\nedge: 2 3\nedge: 4 5\nedge: 5 6\n");
  const Graph path_edge =
      parse_graph("vertices: 1 2 3 4 5\nedge: 1 2\nedge: 2 3\nedge: 4 5\n");

  const ChainReport forward = verify_reduction_chain(paths, path_edge);
  CHECK(forward.alpha_first == 4);
  CHECK(forward.alpha_second == 3);
  CHECK(forward.young_c == 9);
  CHECK(forward.young_d == 7);
  CHECK(forward.alpha_compare);
  CHECK(forward.kappa_compare);
  CHECK(forward.young_ranking);
  CHECK(forward.young_winner == std::optional<bool>(true));
  CHECK(forward.consistent());

  const ChainReport backward = verify_reduction_chain(path_edge, paths);
  CHECK_FALSE(backward.alpha_compare);
  CHECK_FALSE(backward.young_ranking);
  CHECK(backward.young_winner == std::optional<bool>(false));
  CHECK(backward.consistent());

  const ChainReport same = verify_reduction_chain(path_edge, path_edge);
  CHECK(same.alpha_compare);
  CHECK(same.young_ranking);
  CHECK(same.young_winner == std::optional<bool>(true));
  CHECK(same.consistent());
}
