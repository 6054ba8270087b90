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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "votescore/error.hpp"
#include "votescore/exact_scores.hpp"
#include "votescore/profile.hpp"
#include "votescore/reductions.hpp"
#include "votescore/schemes.hpp"
#include "votescore/star_scores.hpp"

namespace py = pybind11;
using namespace votescore;

namespace {

py::object to_fraction(const Rational& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  py::object as_int = py::module_::import("builtins").attr("int");
  return fraction(as_int(value.get_num().get_str()),
                  as_int(value.get_den().get_str()));
}

py::object score_value(Scheme scheme, const Rational& value) {
  if (is_starred(scheme)) return to_fraction(value);
  return py::int_(value.get_num().get_ui());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact and homogeneous Dodgson / Young election scores";

  py::register_exception<Error>(m, "VoteScoreError", PyExc_ValueError);

  py::class_<Profile>(m, "Profile")
      .def_static("parse", &parse_profile, py::arg("text"),
                  "Parse the line-oriented profile format")
      .def("to_text", &serialize_profile)
      .def_property_readonly("candidates", &Profile::candidates)
      .def_property_readonly("voter_count", &Profile::voter_count)
      .def_property_readonly(
          "ballots",
          [](const Profile& p) {
            py::list out;
            for (const Ballot& b : p.ballots()) {
              py::list names;
              for (CandidateIndex c : b.ranking) names.append(p.name(c));
              out.append(py::make_tuple(names, b.multiplicity));
            }
            return out;
          })
      .def("__eq__", [](const Profile& a, const Profile& b) { return a == b; })
      .def("__repr__", [](const Profile& p) {
        return "<Profile candidates=" + std::to_string(p.candidate_count()) +
               " voters=" + std::to_string(p.voter_count()) + ">";
      });

  m.def("tally", [](const Profile& p) {
    const PairwiseTally t = tally(p);
    py::dict out;
    for (CandidateIndex u = 0; u < p.candidate_count(); ++u) {
      for (CandidateIndex v = 0; v < p.candidate_count(); ++v) {
        if (u != v) out[py::make_tuple(p.name(u), p.name(v))] = t.count(u, v);
      }
    }
    return out;
  });
  m.def("condorcet_winner", [](const Profile& p) -> py::object {
    if (auto c = condorcet_winner(p)) return py::str(p.name(*c));
    return py::none();
  });
  m.def("replicate", &replicate, py::arg("profile"), py::arg("q"));
  m.def("restrict", [](const Profile& p, std::vector<std::uint64_t> keep) {
    return restrict_to(p, keep);
  });

  m.def(
      "dodgson_score",
      [](const Profile& p, const std::string& c) {
        const DodgsonResult r = dodgson_score(p, p.index_of(c));
        py::list lifts;
        for (const Lift& l : r.witness) {
          lifts.append(py::make_tuple(l.voter, l.distance));
        }
        return py::make_tuple(r.score, lifts);
      },
      "Returns (score, [(voter, lift), ...]) with 0-based voters");
  m.def("dodgson_score_bruteforce", [](const Profile& p, const std::string& c) {
    return dodgson_score_bruteforce(p, p.index_of(c));
  });
  m.def(
      "young_score",
      [](const Profile& p, const std::string& c) {
        const YoungResult r = young_score(p, p.index_of(c));
        return py::make_tuple(r.score, r.kept);
      },
      "Returns (score, kept voters) with 0-based voters");
  m.def("young_score_bruteforce", [](const Profile& p, const std::string& c) {
    return young_score_bruteforce(p, p.index_of(c)).score;
  });
  m.def("dodgson_star_score", [](const Profile& p, const std::string& c) {
    return to_fraction(dodgson_star_score(p, p.index_of(c)).score);
  });
  m.def("young_star_score", [](const Profile& p, const std::string& c) {
    return to_fraction(young_star_score(p, p.index_of(c)).score);
  });

  m.def(
      "scores",
      [](const std::string& scheme_name, const Profile& p) {
        const Scheme scheme = parse_scheme(scheme_name);
        const auto values = scores(scheme, p);
        py::dict out;
        for (CandidateIndex c = 0; c < values.size(); ++c) {
          out[py::str(p.name(c))] = score_value(scheme, values[c]);
        }
        return out;
      },
      py::arg("scheme"), py::arg("profile"));
  m.def("is_winner", [](const std::string& scheme, const Profile& p,
                        const std::string& c) {
    return is_winner(parse_scheme(scheme), p, p.index_of(c));
  });
  m.def("ranks_at_least", [](const std::string& scheme, const Profile& p,
                             const std::string& c, const std::string& d) {
    return ranks_at_least(parse_scheme(scheme), p, p.index_of(c),
                          p.index_of(d));
  });
  m.def("homogeneity_check", [](const std::string& scheme, const Profile& p,
                                std::uint64_t q) {
    return homogeneity_check(parse_scheme(scheme), p, q);
  });

  py::class_<Graph>(m, "Graph")
      .def_static("parse", &parse_graph)
      .def("to_text", &serialize_graph)
      .def_property_readonly("vertices", &Graph::vertices);
  py::class_<SetFamily>(m, "SetFamily")
      .def_static("parse", &parse_set_family)
      .def("to_text", &serialize_set_family)
      .def_property_readonly("base", &SetFamily::base);

  m.def("alpha", [](const Graph& g) { return alpha(g); });
  m.def("kappa", [](const SetFamily& s) { return kappa(s); });
  m.def("inc_to_mspc", [](const Graph& g1, const Graph& g2) {
    MspcInstance inst = inc_to_mspc(g1, g2);
    return py::make_tuple(inst.first, inst.second);
  });
  m.def("mspc_to_young_ranking", [](const SetFamily& s1, const SetFamily& s2) {
    YoungReduction r = mspc_to_young_ranking({s1, s2});
    std::vector<int> forms;
    for (VoterForm f : r.forms) forms.push_back(static_cast<int>(f));
    return py::make_tuple(r.profile, r.profile.name(r.c),
                          r.profile.name(r.d), forms);
  });
  m.def(
      "amplify_for_winner",
      [](const Profile& p, const std::string& c, const std::string& d,
         bool allow_single_voter) {
        return amplify_for_winner(p, p.index_of(c), p.index_of(d),
                                  allow_single_voter)
            .profile;
      },
      py::arg("profile"), py::arg("c"), py::arg("d"),
      py::arg("allow_single_voter") = false);
  m.def("verify_reduction_chain", [](const Graph& g1, const Graph& g2) {
    const ChainReport r = verify_reduction_chain(g1, g2);
    py::dict out;
    out["alpha"] = py::make_tuple(r.alpha_first, r.alpha_second);
    out["kappa"] = py::make_tuple(r.kappa_first, r.kappa_second);
    out["young_score"] = py::make_tuple(r.young_c, r.young_d);
    out["alpha_compare"] = r.alpha_compare;
    out["kappa_compare"] = r.kappa_compare;
    out["young_ranking"] = r.young_ranking;
    out["young_winner"] =
        r.young_winner ? py::cast(*r.young_winner) : py::none();
    out["notes"] = r.notes;
    out["consistent"] = r.consistent();
    return out;
  });
}
