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

#include "votescore/profile.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "text_util.hpp"
#include "votescore/error.hpp"

namespace votescore {
namespace {

using text::split_whitespace;
using text::trim;
using text::valid_name;

// Checks one ranking against the candidate set; returns an error message or
// an empty string.
std::string check_ranking(const std::vector<CandidateIndex>& ranking,
                          const std::vector<std::string>& candidates) {
  std::vector<bool> seen(candidates.size(), false);
  for (CandidateIndex c : ranking) {
    if (c >= candidates.size()) return "candidate index out of range";
    if (seen[c]) return "duplicate candidate '" + candidates[c] + "' in order";
    seen[c] = true;
  }
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (!seen[c]) return "order omits candidate '" + candidates[c] + "'";
  }
  return {};
}

}  // namespace

Profile::Profile(std::vector<std::string> candidates,
                 std::vector<Ballot> ballots, bool allow_empty)
    : candidates_(std::move(candidates)), ballots_(std::move(ballots)) {
  if (candidates_.empty()) throw Error("profile has no candidates");
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    if (!valid_name(candidates_[i])) {
      throw Error("invalid candidate name '" + candidates_[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (candidates_[i] == candidates_[j]) {
        throw Error("duplicate candidate '" + candidates_[i] + "'");
      }
    }
  }
  const std::size_t m = candidates_.size();
  positions_.resize(ballots_.size() * m);
  ballot_end_.reserve(ballots_.size());
  for (std::size_t b = 0; b < ballots_.size(); ++b) {
    const Ballot& ballot = ballots_[b];
    if (ballot.multiplicity == 0) throw Error("ballot with zero multiplicity");
    if (auto message = check_ranking(ballot.ranking, candidates_);
        !message.empty()) {
      throw Error(message);
    }
    for (std::size_t pos = 0; pos < m; ++pos) {
      positions_[b * m + ballot.ranking[pos]] = pos;
    }
    voter_count_ += ballot.multiplicity;
    ballot_end_.push_back(voter_count_);
  }
  if (voter_count_ == 0 && !allow_empty) {
    throw Error("profile has no voters");
  }
}

std::optional<CandidateIndex> Profile::find(std::string_view name) const {
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    if (candidates_[i] == name) return i;
  }
  return std::nullopt;
}

CandidateIndex Profile::index_of(std::string_view name) const {
  if (auto c = find(name)) return *c;
  throw UnknownCandidate(std::string(name));
}

std::size_t Profile::ballot_of(std::uint64_t voter) const {
  if (voter >= voter_count_) {
    throw GuardViolation("voter index " + std::to_string(voter) +
                         " out of range (n = " + std::to_string(voter_count_) +
                         ")");
  }
  auto it = std::upper_bound(ballot_end_.begin(), ballot_end_.end(), voter);
  return static_cast<std::size_t>(it - ballot_end_.begin());
}

bool same_electorate(const Profile& a, const Profile& b) {
  if (a.candidates() != b.candidates()) return false;
  if (a.voter_count() != b.voter_count()) return false;
  auto collect = [](const Profile& p) {
    std::vector<std::pair<std::vector<CandidateIndex>, std::uint64_t>> out;
    for (const Ballot& ballot : p.ballots()) {
      auto it = std::find_if(out.begin(), out.end(), [&](const auto& entry) {
        return entry.first == ballot.ranking;
      });
      if (it == out.end()) {
        out.emplace_back(ballot.ranking, ballot.multiplicity);
      } else {
        it->second += ballot.multiplicity;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return collect(a) == collect(b);
}

PairwiseTally::PairwiseTally(std::size_t candidate_count, std::uint64_t total)
    : size_(candidate_count),
      total_(total),
      counts_(candidate_count * candidate_count, 0) {}

Profile parse_profile(std::string_view text) {
  std::vector<std::string> candidates;
  std::unordered_map<std::string, CandidateIndex> lookup;
  std::vector<Ballot> ballots;
  bool have_header = false;

  for (const auto& [line_no, line] : text::content_lines(text)) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line_no, "expected 'candidates:' or 'voter:'");
    }
    const auto head = split_whitespace(line.substr(0, colon));
    const std::string_view body = line.substr(colon + 1);

    if (!have_header) {
      if (head.size() != 1 || head[0] != "candidates") {
        throw ParseError(line_no, "first line must be 'candidates: ...'");
      }
      for (std::string_view token : split_whitespace(body)) {
        std::string name(token);
        if (!valid_name(name)) {
          throw ParseError(line_no, "invalid candidate name '" + name + "'");
        }
        if (!lookup.emplace(name, candidates.size()).second) {
          throw ParseError(line_no, "duplicate candidate '" + name + "'");
        }
        candidates.push_back(std::move(name));
      }
      if (candidates.empty()) throw ParseError(line_no, "no candidates");
      have_header = true;
    } else {
      if (head.empty() || head[0] != "voter" || head.size() > 2) {
        throw ParseError(line_no, "expected 'voter[ <multiplicity>]: ...'");
      }
      Ballot ballot;
      if (head.size() == 2) {
        const std::string_view digits = head[1];
        long long value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(),
                                         digits.data() + digits.size(), value);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
          throw ParseError(line_no, "malformed multiplicity '" +
                                        std::string(digits) + "'");
        }
        if (value <= 0) {
          throw ParseError(line_no, "multiplicity must be positive");
        }
        ballot.multiplicity = static_cast<std::uint64_t>(value);
      }
      std::size_t pos = 0;
      std::vector<bool> seen(candidates.size(), false);
      while (pos <= body.size()) {
        std::size_t gt = body.find('>', pos);
        if (gt == std::string_view::npos) gt = body.size();
        const std::string_view token = trim(body.substr(pos, gt - pos));
        pos = gt + 1;
        if (token.empty()) throw ParseError(line_no, "empty candidate slot");
        auto it = lookup.find(std::string(token));
        if (it == lookup.end()) {
          throw ParseError(line_no,
                           "unknown candidate '" + std::string(token) + "'");
        }
        if (seen[it->second]) {
          throw ParseError(line_no, "duplicate candidate '" +
                                        std::string(token) + "' in order");
        }
        seen[it->second] = true;
        ballot.ranking.push_back(it->second);
      }
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (!seen[c]) {
          throw ParseError(line_no,
                           "order omits candidate '" + candidates[c] + "'");
        }
      }
      ballots.push_back(std::move(ballot));
    }
  }
  if (!have_header) throw ParseError(0, "missing 'candidates:' line");
  if (ballots.empty()) throw ParseError(0, "profile has no voters");
  return Profile(std::move(candidates), std::move(ballots));
}

std::string serialize_profile(const Profile& profile) {
  std::ostringstream out;
  out << "candidates:";
  for (const auto& name : profile.candidates()) out << ' ' << name;
  out << '\n';
  for (const Ballot& ballot : profile.ballots()) {
    out << "voter";
    if (ballot.multiplicity != 1) out << ' ' << ballot.multiplicity;
    out << ':';
    for (std::size_t i = 0; i < ballot.ranking.size(); ++i) {
      out << (i == 0 ? " " : " > ") << profile.name(ballot.ranking[i]);
    }
    out << '\n';
  }
  return out.str();
}

PairwiseTally tally(const Profile& profile) {
  const std::size_t m = profile.candidate_count();
  PairwiseTally result(m, profile.voter_count());
  for (const Ballot& ballot : profile.ballots()) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        result.add(ballot.ranking[i], ballot.ranking[j], ballot.multiplicity);
      }
    }
  }
  return result;
}

std::optional<CandidateIndex> condorcet_winner(const PairwiseTally& t) {
  // count > n/2  <=>  2 * count > n
  for (CandidateIndex c = 0; c < t.candidate_count(); ++c) {
    bool wins = t.total() > 0;
    for (CandidateIndex d = 0; d < t.candidate_count() && wins; ++d) {
      if (d != c && 2 * t.count(c, d) <= t.total()) wins = false;
    }
    if (wins) return c;
  }
  return std::nullopt;
}

std::optional<CandidateIndex> condorcet_winner(const Profile& profile) {
  return condorcet_winner(tally(profile));
}

Profile replicate(const Profile& profile, std::uint64_t q) {
  if (q == 0) throw GuardViolation("replication factor must be positive");
  std::vector<Ballot> ballots(profile.ballots().begin(),
                              profile.ballots().end());
  for (Ballot& ballot : ballots) {
    if (ballot.multiplicity > std::numeric_limits<std::uint64_t>::max() / q) {
      throw GuardViolation("replicated multiplicity overflows");
    }
    ballot.multiplicity *= q;
  }
  return Profile(profile.candidates(), std::move(ballots), true);
}

Profile restrict_to(const Profile& profile,
                    std::span<const std::uint64_t> keep) {
  std::vector<std::uint64_t> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GuardViolation("duplicate voter index in subset");
  }
  std::vector<std::uint64_t> kept_per_ballot(profile.ballots().size(), 0);
  for (std::uint64_t voter : sorted) {
    ++kept_per_ballot[profile.ballot_of(voter)];
  }
  std::vector<Ballot> ballots;
  for (std::size_t b = 0; b < kept_per_ballot.size(); ++b) {
    if (kept_per_ballot[b] == 0) continue;
    ballots.push_back({profile.ballots()[b].ranking, kept_per_ballot[b]});
  }
  return Profile(profile.candidates(), std::move(ballots), true);
}

}  // namespace votescore
