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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "votescore/cli.hpp"
#include "votescore/error.hpp"
#include "votescore/profile.hpp"
#include "votescore/report.hpp"

using namespace votescore;

namespace {

const std::string kFixtures = VOTESCORE_FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "votescore");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

Profile cycle() {
  return parse_profile(
      "candidates: A B C\nvoter: A > B > C\nvoter: B > C > A\n"
      "voter: C > A > B\n");
}

}  // namespace

TEST_CASE("json report of the 3-cycle under young-star") {
  const auto report = build_report(Scheme::kYoungStar, cycle());
  CHECK(emit_report(report, Format::kJson) ==
        "{\"A\":\"2/1\",\"B\":\"2/1\",\"C\":\"2/1\"}\n");
}

TEST_CASE("empty candidate filter reports everyone") {
  const auto all = build_report(Scheme::kDodgson, cycle());
  CHECK(all.entries.size() == 3);
  const std::vector<CandidateIndex> only{1};
  const auto one = build_report(Scheme::kDodgson, cycle(), only);
  REQUIRE(one.entries.size() == 1);
  CHECK(one.entries[0].candidate == "B");
}

TEST_CASE("text and json round trips are value identical") {
  for (Scheme s : {Scheme::kDodgson, Scheme::kYoung, Scheme::kDodgsonStar,
                   Scheme::kYoungStar}) {
    const auto report = build_report(s, cycle());
    for (Format f : {Format::kText, Format::kJson}) {
      const auto back = parse_report(emit_report(report, f), f, s);
      REQUIRE(back.entries.size() == report.entries.size());
      for (std::size_t i = 0; i < back.entries.size(); ++i) {
        CHECK(back.entries[i].candidate == report.entries[i].candidate);
        CHECK(back.entries[i].score == report.entries[i].score);
      }
    }
  }
  const auto witnessed = build_report(Scheme::kDodgson, cycle(), {}, true);
  for (Format f : {Format::kText, Format::kJson}) {
    const auto back =
        parse_report(emit_report(witnessed, f), f, Scheme::kDodgson);
    for (std::size_t i = 0; i < back.entries.size(); ++i) {
      CHECK(back.entries[i].witness == witnessed.entries[i].witness);
    }
  }
  CHECK_THROWS_AS(build_report(Scheme::kYoungStar, cycle(), {}, true),
                  GuardViolation);
}

TEST_CASE("text report layout") {
  const auto report = build_report(Scheme::kDodgsonStar, cycle());
  CHECK(emit_report(report, Format::kText) ==
        "# scheme: dodgson-star\n"
        "candidate  score\n"
        "A          1/2\n"
        "B          1/2\n"
        "C          1/2\n");
}

TEST_CASE("cli score verbs") {
  auto r = run({"score", "--scheme", "dodgson", "--profile",
                fixture("cycle.elect"), "--candidate", "A", "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "{\"A\":1}\n");

  r = run({"condorcet", "--profile", fixture("cycle.elect")});
  CHECK(r.code == 0);
  CHECK(r.out == "none\n");

  r = run({"winner", "--scheme", "young", "--profile", fixture("four.elect"),
           "--candidate", "d"});
  CHECK(r.code == 0);
  CHECK(r.out == "false\n");

  r = run({"ranking", "--scheme", "dodgson-star", "--profile",
           fixture("cycle.elect"), "--candidate", "A", "--rival", "B"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
}

TEST_CASE("cli scores the generated reduction profile") {
  auto r = run({"reduce", "--sets1", fixture("singletons.sets"), "--sets2",
                fixture("singletons.sets")});
  REQUIRE(r.code == 0);
  const std::string text = r.out;
  const Profile p = parse_profile(text);
  CHECK(p.voter_count() == 14);

  const std::string path = "cli_reduce_profile.elect";
  {
    std::ofstream file(path);
    file << text;
  }
  r = run({"score", "--scheme", "young", "--profile", path, "--candidate", "c"});
  CHECK(r.code == 0);
  CHECK(r.out == "# scheme: young\ncandidate  score\nc          7\n");
  std::remove(path.c_str());
}

TEST_CASE("cli error handling") {
  auto r = run({});
  CHECK(r.code == cli::kExitUsage);
  r = run({"score", "--profile", fixture("cycle.elect")});
  CHECK(r.code == cli::kExitUsage);
  r = run({"score", "--scheme", "borda", "--profile", fixture("cycle.elect")});
  CHECK(r.code == cli::kExitUsage);
  r = run({"frobnicate"});
  CHECK(r.code == cli::kExitUsage);

  r = run({"score", "--scheme", "young", "--profile", fixture("missing.elect")});
  CHECK(r.code == cli::kExitDomainError);
  CHECK_FALSE(r.err.empty());
  r = run({"score", "--scheme", "young", "--profile", fixture("cycle.elect"),
           "--candidate", "Z"});
  CHECK(r.code == cli::kExitDomainError);
  r = run({"score", "--scheme", "young", "--profile",
           fixture("two_paths.graph")});
  CHECK(r.code == cli::kExitDomainError);
  r = run({"reduce", "--graph1", fixture("path_edge.graph"), "--graph2",
           fixture("path_edge.graph"), "--sets1", fixture("singletons.sets")});
  CHECK(r.code == cli::kExitUsage);
  r = run({"amplify", "--profile", fixture("cycle.elect"), "--c", "A", "--d",
           "A"});
  CHECK(r.code == cli::kExitDomainError);
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::string> args{"verify", "--graph1",
                                      fixture("two_paths.graph"), "--graph2",
                                      fixture("path_edge.graph"), "--format",
                                      "json"};
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("\"consistent\":true") != std::string::npos);
}
