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

#include "votescore/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "text_util.hpp"
#include "votescore/error.hpp"
#include "votescore/exact_scores.hpp"

namespace votescore {
namespace {

std::string render_score(Scheme scheme, const Rational& value) {
  return is_starred(scheme) ? to_fraction_string(value) : value.get_str();
}

std::string render_lifts(const std::vector<Lift>& lifts) {
  if (lifts.empty()) return "-";
  std::string out;
  for (const Lift& lift : lifts) {
    if (!out.empty()) out += ',';
    out += std::to_string(lift.voter + 1) + ":+" + std::to_string(lift.distance);
  }
  return out;
}

std::string render_kept(const std::vector<std::uint64_t>& kept) {
  if (kept.empty()) return "-";
  std::string out;
  for (std::uint64_t v : kept) {
    if (!out.empty()) out += ',';
    out += std::to_string(v + 1);
  }
  return out;
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "text") return Format::kText;
  if (text == "json") return Format::kJson;
  throw GuardViolation("unknown format '" + std::string(text) + "'");
}

ScoreReport build_report(Scheme scheme, const Profile& profile,
                         std::span<const CandidateIndex> only,
                         bool with_witness) {
  if (with_witness && is_starred(scheme)) {
    throw GuardViolation("witnesses are only available for exact schemes");
  }
  ScoreReport report{scheme, {}};
  for (CandidateIndex c = 0; c < profile.candidate_count(); ++c) {
    if (!only.empty() && std::find(only.begin(), only.end(), c) == only.end()) {
      continue;
    }
    ScoreEntry entry{profile.name(c), Rational(0), std::nullopt};
    if (with_witness && scheme == Scheme::kDodgson) {
      const DodgsonResult r = dodgson_score(profile, c);
      entry.score = from_count(r.score);
      entry.witness = render_lifts(r.witness);
    } else if (with_witness && scheme == Scheme::kYoung) {
      const YoungResult r = young_score(profile, c);
      entry.score = from_count(r.score);
      entry.witness = render_kept(r.kept);
    } else {
      entry.score = score(scheme, profile, c);
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::string emit_report(const ScoreReport& report, Format format) {
  if (format == Format::kJson) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (const ScoreEntry& e : report.entries) {
      nlohmann::ordered_json value;
      if (is_starred(report.scheme)) {
        value = to_fraction_string(e.score);
      } else {
        value = e.score.get_num().get_ui();
      }
      if (e.witness) {
        value = {{"score", std::move(value)}, {"witness", *e.witness}};
      }
      object[e.candidate] = std::move(value);
    }
    return object.dump() + "\n";
  }

  std::size_t name_width = std::string_view("candidate").size();
  std::size_t score_width = std::string_view("score").size();
  bool any_witness = false;
  for (const ScoreEntry& e : report.entries) {
    name_width = std::max(name_width, e.candidate.size());
    score_width =
        std::max(score_width, render_score(report.scheme, e.score).size());
    any_witness = any_witness || e.witness.has_value();
  }
  std::ostringstream out;
  out << "# scheme: " << to_string(report.scheme) << '\n';
  auto row = [&](std::string_view name, std::string_view value,
                 const std::optional<std::string>& witness) {
    out << std::left << std::setw(static_cast<int>(name_width)) << name << "  ";
    if (any_witness) {
      out << std::setw(static_cast<int>(score_width)) << value << "  "
          << witness.value_or("");
    } else {
      out << value;
    }
    out << '\n';
  };
  row("candidate", "score", std::string("witness"));
  for (const ScoreEntry& e : report.entries) {
    row(e.candidate, render_score(report.scheme, e.score), e.witness);
  }
  return out.str();
}

ScoreReport parse_report(std::string_view input, Format format,
                         Scheme scheme) {
  ScoreReport report{scheme, {}};
  if (format == Format::kJson) {
    const auto object = nlohmann::ordered_json::parse(input.begin(), input.end());
    for (const auto& [name, item] : object.items()) {
      std::optional<std::string> witness;
      const auto& value = item.is_object() ? item.at("score") : item;
      if (item.is_object()) witness = item.at("witness").get<std::string>();
      Rational score = value.is_string()
                           ? parse_rational(value.get<std::string>())
                           : from_count(value.get<std::uint64_t>());
      report.entries.push_back({name, std::move(score), std::move(witness)});
    }
    return report;
  }
  bool header = false;
  bool has_witness = false;
  for (const text::Line& line : text::content_lines(input)) {
    const auto fields = text::split_whitespace(line.text);
    if (!header) {
      header = true;
      has_witness = fields.size() == 3;
      continue;
    }
    if (fields.size() < 2) throw ParseError(line.number, "expected 2 columns");
    std::optional<std::string> witness;
    if (has_witness && fields.size() > 2) witness = std::string(fields[2]);
    report.entries.push_back(
        {std::string(fields[0]), parse_rational(fields[1]), std::move(witness)});
  }
  return report;
}

}  // namespace votescore
