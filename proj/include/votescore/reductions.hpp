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

// Instance generators for the hardness chain
//
//   independence number compare -> maximum set packing compare
//                               -> Young ranking -> Young winner
//
// together with exhaustive alpha / kappa oracles and a chain verifier.

#ifndef VOTESCORE_REDUCTIONS_HPP_
#define VOTESCORE_REDUCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "votescore/profile.hpp"

namespace votescore {

using VertexIndex = std::size_t;

// Simple undirected graph. Edges are stored with the smaller endpoint first.
class Graph {
 public:
  // Throws Error on loops, repeated edges, bad names or unknown endpoints.
  Graph(std::vector<std::string> vertices,
        std::vector<std::pair<VertexIndex, VertexIndex>> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::pair<VertexIndex, VertexIndex>>& edges() const {
    return edges_;
  }
  std::size_t degree(VertexIndex v) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::pair<VertexIndex, VertexIndex>> edges_;
};

// A family of nonempty subsets of an ordered ground set. Member sets hold
// ascending ground-set indices; the family may repeat a set.
class SetFamily {
 public:
  SetFamily(std::vector<std::string> base,
            std::vector<std::vector<std::size_t>> sets);

  const std::vector<std::string>& base() const { return base_; }
  const std::vector<std::vector<std::size_t>>& sets() const { return sets_; }

 private:
  std::vector<std::string> base_;
  std::vector<std::vector<std::size_t>> sets_;
};

struct MspcInstance {
  SetFamily first;
  SetFamily second;
};

// `vertices: a b c` then `edge: a b` lines; `#` comments.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& graph);

// `base: x1 x2 x3` then `set: x1 x3` lines; `#` comments.
SetFamily parse_set_family(std::string_view text);
std::string serialize_set_family(const SetFamily& family);

// Independence number by exhaustive branching. Throws GuardViolation above
// `max_vertices`.
std::size_t alpha(const Graph& graph, std::size_t max_vertices = 16);

// Maximum number of pairwise disjoint member sets. Throws GuardViolation
// above `max_sets`.
std::size_t kappa(const SetFamily& family, std::size_t max_sets = 16);

// Ground set = edges (named "u-v"), one member set per vertex holding its
// incident edges. Rejects isolated vertices, whose sets would be empty.
SetFamily incidence_family(const Graph& graph);
MspcInstance inc_to_mspc(const Graph& first, const Graph& second);

// Shape of each generated voter, numbered as in the construction:
//   1: E > a > c > (B1 - E) > B2 > b > d         one per E in S1
//   2: c > B1 > a > B2 > b > d                   two voters
//   3: B1 > c > a > B2 > b > d                   |S1| - 1 voters
//   4: F > b > d > (B2 - F) > B1 > a > c         one per F in S2
//   5: d > B2 > b > B1 > a > c                   two voters
//   6: B2 > d > b > B1 > a > c                   |S2| - 1 voters
// where a block lists its elements in ascending ground-set order.
enum class VoterForm : int {
  kFirstMember = 1,
  kFirstLeader = 2,
  kFirstFiller = 3,
  kSecondMember = 4,
  kSecondLeader = 5,
  kSecondFiller = 6,
};

struct YoungReduction {
  Profile profile;
  CandidateIndex c = 0;
  CandidateIndex d = 0;
  CandidateIndex a = 0;
  CandidateIndex b = 0;
  std::vector<VoterForm> forms;           // per expanded voter
  std::vector<std::uint64_t> first_set_voter;   // S1 member -> voter
  std::vector<std::uint64_t> second_set_voter;  // S2 member -> voter
};

// Builds <C, V> with YoungScore(c) = 2 kappa(S1) + 1 and
// YoungScore(d) = 2 kappa(S2) + 1. Candidates are c, d, x_<e> for every
// e in B1, y_<e> for every e in B2, then a and b. Requires kappa > 2 on both
// sides (checked with `kappa`, so each family is capped at `max_sets`).
YoungReduction mspc_to_young_ranking(const MspcInstance& instance,
                                     std::size_t max_sets = 16);

struct Amplification {
  Profile profile;
  CandidateIndex c = 0;
  CandidateIndex d = 0;
  // Every new candidate g^k that replaced some original g.
  std::vector<CandidateIndex> replaced;
};

// Replaces every candidate g other than c and d by g^0 .. g^{n-1}; in
// expanded voter i (0-based) g becomes g^{i mod n} > g^{i+1 mod n} > ... .
// Young scores of c and d are unchanged and every g^k scores at most 1.
// Requires n >= 2 unless `allow_single_voter`. With nothing to replace the
// profile is returned unchanged.
Amplification amplify_for_winner(const Profile& profile, CandidateIndex c,
                                 CandidateIndex d,
                                 bool allow_single_voter = false);

struct ChainOptions {
  std::size_t max_vertices = 16;
  // Young scores are cross-checked by subset enumeration up to this size.
  std::uint64_t bruteforce_voter_cap = 22;
  // The amplified Young-winner stage runs only up to this many voters.
  std::uint64_t winner_voter_cap = 40;
};

struct ChainReport {
  std::size_t alpha_first = 0;
  std::size_t alpha_second = 0;
  std::size_t kappa_first = 0;
  std::size_t kappa_second = 0;
  std::uint64_t voters = 0;
  std::size_t candidates = 0;
  std::uint64_t young_c = 0;
  std::uint64_t young_d = 0;
  bool alpha_compare = false;    // alpha(G1) >= alpha(G2)
  bool kappa_compare = false;    // kappa(S1) >= kappa(S2)
  bool young_ranking = false;    // YoungScore(c) >= YoungScore(d)
  std::optional<bool> young_winner;  // c wins the amplified election
  // alpha = kappa on both sides and both Young scores equal 2 kappa + 1.
  bool postconditions_hold = true;
  std::vector<std::string> notes;

  // Every computed stage agrees and every postcondition held.
  bool consistent() const;
};

ChainReport verify_reduction_chain(const Graph& first, const Graph& second,
                                   const ChainOptions& options = {});

}  // namespace votescore

#endif  // VOTESCORE_REDUCTIONS_HPP_
