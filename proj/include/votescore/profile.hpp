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

// Election data model: candidates, strict preference orders with
// multiplicities, head-to-head tallies and the Condorcet winner.

#ifndef VOTESCORE_PROFILE_HPP_
#define VOTESCORE_PROFILE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace votescore {

// Index into Profile::candidates().
using CandidateIndex = std::size_t;

// A strict total order over all candidates, most preferred first, held by
// `multiplicity` identical voters.
struct Ballot {
  std::vector<CandidateIndex> ranking;
  std::uint64_t multiplicity = 1;

  friend bool operator==(const Ballot&, const Ballot&) = default;
};

// An election <C, V>. Immutable once built.
//
// Voters are stored compressed as ballots, but every per-voter API uses
// expanded voter indices 0..n-1 in file order: ballot 0 covers voters
// [0, m0), ballot 1 covers [m0, m0 + m1), and so on.
class Profile {
 public:
  // Validates names (non-empty, no whitespace, no '>'), uniqueness, and that
  // every ranking is a permutation of the candidate set. An empty electorate
  // is only accepted when `allow_empty` is set. Throws votescore::Error.
  Profile(std::vector<std::string> candidates, std::vector<Ballot> ballots,
          bool allow_empty = false);

  const std::vector<std::string>& candidates() const { return candidates_; }
  std::span<const Ballot> ballots() const { return ballots_; }
  std::size_t candidate_count() const { return candidates_.size(); }
  std::uint64_t voter_count() const { return voter_count_; }

  const std::string& name(CandidateIndex c) const { return candidates_.at(c); }
  std::optional<CandidateIndex> find(std::string_view name) const;
  // Throws UnknownCandidate.
  CandidateIndex index_of(std::string_view name) const;

  // Ballot holding expanded voter `voter`. Throws GuardViolation when out of
  // range.
  std::size_t ballot_of(std::uint64_t voter) const;
  const std::vector<CandidateIndex>& order_of(std::uint64_t voter) const {
    return ballots_[ballot_of(voter)].ranking;
  }

  // 0-based position of `c` in ballot `ballot` (0 = top).
  std::size_t position(std::size_t ballot, CandidateIndex c) const {
    return positions_[ballot * candidates_.size() + c];
  }
  bool prefers(std::size_t ballot, CandidateIndex u, CandidateIndex v) const {
    return position(ballot, u) < position(ballot, v);
  }

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.candidates_ == b.candidates_ && a.ballots_ == b.ballots_;
  }

 private:
  std::vector<std::string> candidates_;
  std::vector<Ballot> ballots_;
  std::vector<std::uint64_t> ballot_end_;  // exclusive prefix sums
  std::vector<std::size_t> positions_;     // ballot-major position table
  std::uint64_t voter_count_ = 0;
};

// True when both profiles have the same candidate list and the same multiset
// of expanded voter orders (voter order and ballot grouping ignored).
bool same_electorate(const Profile& a, const Profile& b);

// Head-to-head counts: count(u, v) voters rank u above v.
class PairwiseTally {
 public:
  PairwiseTally(std::size_t candidate_count, std::uint64_t total);

  std::size_t candidate_count() const { return size_; }
  std::uint64_t total() const { return total_; }
  std::uint64_t count(CandidateIndex u, CandidateIndex v) const {
    return counts_[u * size_ + v];
  }
  void add(CandidateIndex u, CandidateIndex v, std::uint64_t amount) {
    counts_[u * size_ + v] += amount;
  }

  friend bool operator==(const PairwiseTally&, const PairwiseTally&) = default;

 private:
  std::size_t size_;
  std::uint64_t total_;
  std::vector<std::uint64_t> counts_;
};

// Parses the line-oriented profile format:
//
//   # comment
//   candidates: a b c
//   voter: a > b > c
//   voter 2: c > b > a
//
// Throws ParseError carrying the offending line number.
Profile parse_profile(std::string_view text);

// Inverse of parse_profile; ballots are written in stored order.
std::string serialize_profile(const Profile& profile);

PairwiseTally tally(const Profile& profile);

// The candidate beating every rival by a strict majority, if any. With an
// empty electorate there is none.
std::optional<CandidateIndex> condorcet_winner(const Profile& profile);
std::optional<CandidateIndex> condorcet_winner(const PairwiseTally& tally);

// Multiplies every multiplicity by q (q >= 1).
Profile replicate(const Profile& profile, std::uint64_t q);

// Profile of exactly the listed expanded voters (0-based, any order,
// duplicates rejected). The result keeps file order and may be empty.
Profile restrict_to(const Profile& profile,
                    std::span<const std::uint64_t> keep);

}  // namespace votescore

#endif  // VOTESCORE_PROFILE_HPP_
