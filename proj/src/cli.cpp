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

#include "votescore/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "votescore/error.hpp"
#include "votescore/exact_scores.hpp"
#include "votescore/reductions.hpp"
#include "votescore/report.hpp"
#include "votescore/schemes.hpp"
#include "votescore/star_scores.hpp"

namespace votescore::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

Profile load_profile(const std::string& path) {
  try {
    return parse_profile(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

Graph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

SetFamily load_sets(const std::string& path) {
  try {
    return parse_set_family(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

const char* truth(bool value) { return value ? "true" : "false"; }

struct Options {
  std::string scheme = "dodgson";
  std::string format = "text";
  std::string profile;
  std::vector<std::string> candidates;
  std::string candidate;
  std::string rival;
  std::string graph1, graph2, sets1, sets2, out1, out2;
  std::string c, d;
  bool allow_single_voter = false;
  bool witness = false;
  std::vector<std::uint64_t> q_values{1, 2, 4, 8, 16};
};

int cmd_score(const Options& o, std::ostream& out) {
  const Scheme scheme = parse_scheme(o.scheme);
  const Format format = parse_format(o.format);
  if (o.witness && is_starred(scheme)) {
    throw GuardViolation("--witness needs an exact scheme");
  }
  const Profile profile = load_profile(o.profile);
  std::vector<CandidateIndex> only;
  for (const auto& name : o.candidates) only.push_back(profile.index_of(name));
  out << emit_report(build_report(scheme, profile, only, o.witness), format);
  return kExitOk;
}

int cmd_winner(const Options& o, std::ostream& out) {
  const Scheme scheme = parse_scheme(o.scheme);
  const Profile profile = load_profile(o.profile);
  out << truth(is_winner(scheme, profile, profile.index_of(o.candidate)))
      << '\n';
  return kExitOk;
}

int cmd_ranking(const Options& o, std::ostream& out) {
  const Scheme scheme = parse_scheme(o.scheme);
  const Profile profile = load_profile(o.profile);
  const CandidateIndex c = profile.index_of(o.candidate);
  const CandidateIndex d = profile.index_of(o.rival);
  out << truth(ranks_at_least(scheme, profile, c, d)) << '\n';
  return kExitOk;
}

int cmd_condorcet(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const Profile profile = load_profile(o.profile);
  const auto winner = condorcet_winner(profile);
  if (format == Format::kJson) {
    nlohmann::ordered_json j;
    j["condorcet_winner"] =
        winner ? nlohmann::ordered_json(profile.name(*winner)) : nullptr;
    out << j.dump() << '\n';
  } else {
    out << (winner ? profile.name(*winner) : std::string("none")) << '\n';
  }
  return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const bool from_graphs = !o.graph1.empty() || !o.graph2.empty();
  const bool from_sets = !o.sets1.empty() || !o.sets2.empty();
  if (from_graphs == from_sets) {
    throw GuardViolation(
        "reduce takes either --graph1/--graph2 or --sets1/--sets2");
  }
  if (from_graphs) {
    if (o.graph1.empty() || o.graph2.empty()) {
      throw GuardViolation("reduce needs both --graph1 and --graph2");
    }
    const MspcInstance inst =
        inc_to_mspc(load_graph(o.graph1), load_graph(o.graph2));
    const std::string first = serialize_set_family(inst.first);
    const std::string second = serialize_set_family(inst.second);
    if (!o.out1.empty()) write_file(o.out1, first);
    if (!o.out2.empty()) write_file(o.out2, second);
    if (o.out1.empty() || o.out2.empty()) {
      out << "# first family\n" << first << "# second family\n" << second;
    }
    return kExitOk;
  }
  if (o.sets1.empty() || o.sets2.empty()) {
    throw GuardViolation("reduce needs both --sets1 and --sets2");
  }
  const YoungReduction reduction =
      mspc_to_young_ranking({load_sets(o.sets1), load_sets(o.sets2)});
  out << "# designated: " << reduction.profile.name(reduction.c) << ' '
      << reduction.profile.name(reduction.d) << '\n'
      << serialize_profile(reduction.profile);
  return kExitOk;
}

int cmd_amplify(const Options& o, std::ostream& out) {
  const Profile profile = load_profile(o.profile);
  const Amplification amplified =
      amplify_for_winner(profile, profile.index_of(o.c), profile.index_of(o.d),
                         o.allow_single_voter);
  out << serialize_profile(amplified.profile);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const ChainReport r =
      verify_reduction_chain(load_graph(o.graph1), load_graph(o.graph2));
  if (format == Format::kJson) {
    nlohmann::ordered_json j;
    j["alpha"] = {r.alpha_first, r.alpha_second};
    j["kappa"] = {r.kappa_first, r.kappa_second};
    j["voters"] = r.voters;
    j["candidates"] = r.candidates;
    j["young_score"] = {r.young_c, r.young_d};
    j["alpha_compare"] = r.alpha_compare;
    j["kappa_compare"] = r.kappa_compare;
    j["young_ranking"] = r.young_ranking;
    j["young_winner"] = r.young_winner ? nlohmann::ordered_json(*r.young_winner)
                                       : nlohmann::ordered_json(nullptr);
    j["postconditions_hold"] = r.postconditions_hold;
    j["notes"] = r.notes;
    j["consistent"] = r.consistent();
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "alpha(G1)        " << r.alpha_first << '\n'
      << "alpha(G2)        " << r.alpha_second << '\n'
      << "kappa(S1)        " << r.kappa_first << '\n'
      << "kappa(S2)        " << r.kappa_second << '\n'
      << "profile          " << r.voters << " voters, " << r.candidates
      << " candidates\n"
      << "young(c)         " << r.young_c << '\n'
      << "young(d)         " << r.young_d << '\n'
      << "alpha compare    " << truth(r.alpha_compare) << '\n'
      << "kappa compare    " << truth(r.kappa_compare) << '\n'
      << "young ranking    " << truth(r.young_ranking) << '\n'
      << "young winner     "
      << (r.young_winner ? truth(*r.young_winner) : "skipped") << '\n';
  for (const auto& note : r.notes) out << "note: " << note << '\n';
  out << truth(r.consistent()) << '\n';
  return kExitOk;
}

int cmd_convergence(const Options& o, std::ostream& out) {
  const Scheme scheme = parse_scheme(o.scheme);
  if (!is_starred(scheme)) {
    throw GuardViolation("convergence needs dodgson-star or young-star");
  }
  const Format format = parse_format(o.format);
  const Profile profile = load_profile(o.profile);
  const CandidateIndex c = profile.index_of(o.candidate);
  const Scheme exact =
      scheme == Scheme::kDodgsonStar ? Scheme::kDodgson : Scheme::kYoung;
  const Rational limit = score(scheme, profile, c);

  struct Row {
    std::uint64_t q;
    Rational finite;
    Rational ratio;
  };
  std::vector<Row> rows;
  for (std::uint64_t q : o.q_values) {
    const Rational finite = score(exact, replicate(profile, q), c);
    rows.push_back({q, finite, finite / from_count(q)});
  }

  if (format == Format::kJson) {
    nlohmann::ordered_json j;
    j["scheme"] = std::string(to_string(scheme));
    j["candidate"] = profile.name(c);
    j["rows"] = nlohmann::ordered_json::array();
    for (const Row& r : rows) {
      j["rows"].push_back({{"q", r.q},
                           {"score", r.finite.get_num().get_ui()},
                           {"ratio", to_fraction_string(r.ratio)}});
    }
    j["limit"] = to_fraction_string(limit);
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "# scheme: " << to_string(scheme) << "  candidate: " << profile.name(c)
      << '\n';
  out << std::left << std::setw(6) << "q" << std::setw(8) << "score"
      << "score/q\n";
  for (const Row& r : rows) {
    out << std::setw(6) << r.q << std::setw(8) << r.finite.get_str()
        << to_fraction_string(r.ratio) << '\n';
  }
  out << "limit " << to_fraction_string(limit) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact and homogeneous Dodgson / Young election scores"};
  app.name(args.empty() ? "votescore" : args.front());
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> schemes{"dodgson", "young", "dodgson-star",
                                         "young-star"};
  const std::vector<std::string> formats{"text", "json"};

  auto add_scheme = [&](CLI::App* sub) {
    sub->add_option("--scheme", o.scheme, "Scoring scheme")
        ->check(CLI::IsMember(schemes))
        ->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
  };
  auto add_profile = [&](CLI::App* sub) {
    sub->add_option("--profile", o.profile, "Profile file (.elect)")
        ->required();
  };

  CLI::App* score = app.add_subcommand("score", "Score candidates");
  add_scheme(score);
  add_profile(score);
  add_format(score);
  score->add_option("--candidate", o.candidates,
                    "Restrict the report to these candidates");
  score->add_flag("--witness", o.witness,
                  "Show lift lists / kept voters (exact schemes, 1-based)");

  CLI::App* winner = app.add_subcommand("winner", "Is the candidate a winner?");
  add_scheme(winner);
  add_profile(winner);
  winner->add_option("--candidate", o.candidate)->required();

  CLI::App* ranking =
      app.add_subcommand("ranking", "Does the candidate tie or defeat rival?");
  add_scheme(ranking);
  add_profile(ranking);
  ranking->add_option("--candidate", o.candidate)->required();
  ranking->add_option("--rival", o.rival)->required();

  CLI::App* condorcet =
      app.add_subcommand("condorcet", "Print the Condorcet winner or none");
  add_profile(condorcet);
  add_format(condorcet);

  CLI::App* reduce = app.add_subcommand(
      "reduce", "Graphs -> set families, or set families -> Young profile");
  CLI::Option* graph1 =
      reduce->add_option("--graph1", o.graph1, "First graph (.graph)");
  CLI::Option* graph2 =
      reduce->add_option("--graph2", o.graph2, "Second graph (.graph)");
  CLI::Option* sets1 =
      reduce->add_option("--sets1", o.sets1, "First set family (.sets)");
  CLI::Option* sets2 =
      reduce->add_option("--sets2", o.sets2, "Second set family (.sets)");
  CLI::Option* out1 =
      reduce->add_option("--out1", o.out1, "Write the first family here");
  CLI::Option* out2 =
      reduce->add_option("--out2", o.out2, "Write the second family here");
  graph1->needs(graph2);
  graph2->needs(graph1);
  sets1->needs(sets2)->excludes(graph1)->excludes(graph2);
  sets2->needs(sets1)->excludes(graph1)->excludes(graph2);
  out1->needs(graph1);
  out2->needs(graph1);
  reduce->require_option(2, 4);

  CLI::App* amplify = app.add_subcommand(
      "amplify", "Replicate non-designated candidates into rotated blocks");
  add_profile(amplify);
  amplify->add_option("--c", o.c, "First designated candidate")->required();
  amplify->add_option("--d", o.d, "Second designated candidate")->required();
  amplify->add_flag("--allow-single-voter", o.allow_single_voter);

  CLI::App* verify =
      app.add_subcommand("verify", "Run and cross-check the reduction chain");
  verify->add_option("--graph1", o.graph1)->required();
  verify->add_option("--graph2", o.graph2)->required();
  add_format(verify);

  CLI::App* convergence = app.add_subcommand(
      "convergence", "Compare score(qV)/q with the homogeneous limit");
  convergence
      ->add_option("--scheme", o.scheme, "dodgson-star or young-star")
      ->check(CLI::IsMember(std::vector<std::string>{"dodgson-star",
                                                      "young-star"}))
      ->required();
  add_profile(convergence);
  add_format(convergence);
  convergence->add_option("--candidate", o.candidate)->required();
  convergence
      ->add_option("--q", o.q_values, "Comma-separated replication factors")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (score->parsed()) return cmd_score(o, out);
    if (winner->parsed()) return cmd_winner(o, out);
    if (ranking->parsed()) return cmd_ranking(o, out);
    if (condorcet->parsed()) return cmd_condorcet(o, out);
    if (reduce->parsed()) return cmd_reduce(o, out);
    if (amplify->parsed()) return cmd_amplify(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (convergence->parsed()) return cmd_convergence(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace votescore::cli
