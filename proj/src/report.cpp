// Copyright 2026 The bicyclic authors
//
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

#include "bicyclic/report.hpp"

namespace bicyclic {

  using json = nlohmann::ordered_json;

  namespace {
    template <class... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };

    json index_map(std::map<index_t, index_t> const& m) {
      json j = json::object();
      for (auto const& [t, k] : m) {
        j[std::to_string(t)] = k;
      }
      return j;
    }

    json element_map(std::map<index_t, Element> const& m) {
      json j = json::object();
      for (auto const& [k, x] : m) {
        j[std::to_string(k)] = x;
      }
      return j;
    }
  }  // namespace

  void to_json(json& j, Element const& x) {
    j = json{{"k", x.k}, {"l", x.l}};
  }

  void to_json(json& j, Atom const& a) {
    std::visit(overloaded{[&](Single const& s) {
                            j = json{{"kind", "single"},
                                     {"k", s.e.k},
                                     {"l", s.e.l}};
                          },
                          [&](RowTail const& r) {
                            j = json{{"kind", "row_tail"},
                                     {"row", r.row},
                                     {"base", r.base},
                                     {"step", r.step}};
                          },
                          [&](ColTail const& c) {
                            j = json{{"kind", "col_tail"},
                                     {"col", c.col},
                                     {"base", c.base},
                                     {"step", c.step}};
                          }},
               a);
  }

  void to_json(json& j, SymSet const& s) {
    json atoms = json::array();
    for (auto const& a : s.atoms()) {
      atoms.push_back(a);
    }
    j = json{{"text", to_string(s)}, {"atoms", std::move(atoms)}};
  }

  void to_json(json& j, SubsetCertificate const& c) {
    j = json{{"holds", c.holds}, {"covering_bound", c.covering_bound}};
    j["counterexample"]
        = c.counterexample ? json(*c.counterexample) : json(nullptr);
  }

  void to_json(json& j, Closure const& c) {
    json elems = json::array();
    for (auto const& x : c.elements) {
      elems.push_back(x);
    }
    j = json{{"saturated", c.saturated},
             {"size", c.elements.size()},
             {"elements", std::move(elems)}};
  }

  void to_json(json& j, Census const& c) {
    j = json{{"count", c.count},
             {"verdict", to_string(c.verdict)},
             {"reason", c.reason}};
    j["witness"] = c.witness ? json::array({c.witness->first, c.witness->second})
                             : json(nullptr);
  }

  void to_json(json& j, Prop1Family const& f) {
    json prefix = json::array();
    for (auto const& m : f.prefix) {
      prefix.push_back(json{{"p", m.p},
                            {"u_power", m.u_power},
                            {"v_power", m.v_power},
                            {"uv", m.uv},
                            {"vu", m.vu},
                            {"expected_uv", m.expected_uv},
                            {"expected_vu", m.expected_vu},
                            {"ok", m.ok}});
    }
    j = json{{"i", f.i},           {"j", f.j},
             {"k", f.k},           {"l", f.l},
             {"family_base", f.base}, {"family_step", f.kl},
             {"verified", f.verified()}, {"prefix", std::move(prefix)}};
  }

  void to_json(json& j, Thm1Neighborhood const& n) {
    j = json{{"i0", n.i0},
             {"a_set", n.a_set},
             {"size", n.a_set.size()},
             {"characterization_ok", n.characterization_ok},
             {"contains_point", n.contains_point},
             {"retractions_ok", n.retractions_ok}};
  }

  void to_json(json& j, Verdict const& v) {
    std::visit(
        overloaded{[&](ContinuousAt const& c) {
                     j = json{{"verdict", "ContinuousAt"},
                              {"modulus", index_map(c.modulus)}};
                   },
                   [&](DiscontinuousAt const& d) {
                     j = json{{"verdict", "DiscontinuousAt"},
                              {"target_index", d.target_index},
                              {"counterexamples", element_map(d.counterexamples)}};
                     j["structural_reason"] = d.structural_reason
                                                  ? json(*d.structural_reason)
                                                  : json(nullptr);
                   },
                   [&](RefutedUpToBound const& r) {
                     j = json{{"verdict", "RefutedUpToBound"},
                              {"target_index", r.target_index},
                              {"probe_bound", r.probe_bound},
                              {"counterexamples", element_map(r.counterexamples)}};
                   }},
        v);
  }

  void to_json(json& j, ShiftCell const& c) {
    j = json{{"cell", json{{"s", c.s}, {"x", c.x}, {"t", c.t}}}};
    j.update(json(c.verdict));
  }

  void to_json(json& j, ShiftReport const& r) {
    j = json{{"cells", r.cells.size()},
             {"continuous", r.continuous()},
             {"discontinuous", r.discontinuous()},
             {"refuted", r.refuted()},
             {"records", r.cells}};
  }

  void to_json(json& j, JointCell const& c) {
    j = json{{"cell", json{{"x", c.x}, {"y", c.y}, {"t", c.t}}},
             {"case", c.isolation_case},
             {"containment", to_string(c.containment)}};
    j.update(json(c.verdict));
  }

  void to_json(json& j, Prop2Report const& r) {
    json cases = json::array();
    for (std::size_t i = 0; i < r.cases.size(); ++i) {
      auto const& s = r.cases[i];
      cases.push_back(json{{"case", i + 1},
                           {"cells", s.cells},
                           {"continuous", s.continuous},
                           {"equal", s.equal},
                           {"strict", s.strict}});
    }
    j = json{{"p", r.p},
             {"m", r.m},
             {"n", r.n},
             {"bound", r.bound},
             {"t_max", r.t_max},
             {"all_continuous", r.all_continuous()},
             {"cases", std::move(cases)},
             {"records", r.cells}};
  }

  void to_json(json& j, DiscontinuityWitness const& w) {
    j = json{{"cell", json{{"s", w.s}, {"x", w.x}, {"t", w.t}}}};
    j.update(json(Verdict{w.verdict}));
  }

  void to_json(json& j, Thm2Replay const& r) {
    j = json{{"left_factor", r.left_factor},
             {"rhs", r.rhs},
             {"point", r.point},
             {"product", r.product},
             {"product_ok", r.product_ok},
             {"solutions", r.solutions},
             {"solutions_contain_point", r.solutions_contain_point},
             {"block_size", r.block.size()},
             {"block_contains_point", r.block_contains_point},
             {"retract_excludes_point", r.retract_excludes_point},
             {"ok", r.ok()}};
  }

  void to_json(json& j, SuiteReport const& r) {
    j = json{{"suite", r.name},
             {"passed", r.passed()},
             {"checks", r.checks},
             {"failure_count", r.failure_count},
             {"failures", r.failures},
             {"notes", r.notes}};
  }

  std::string describe(Verdict const& v) {
    return std::visit(
        overloaded{
            [](ContinuousAt const& c) {
              std::string s = "ContinuousAt";
              for (auto const& [t, k] : c.modulus) {
                s += " k(" + std::to_string(t) + ")=" + std::to_string(k);
              }
              return s;
            },
            [](DiscontinuousAt const& d) {
              std::string s = "DiscontinuousAt t=" + std::to_string(d.target_index);
              if (!d.counterexamples.empty()) {
                auto const& [k, x] = *d.counterexamples.begin();
                s += " counterexample(k=" + std::to_string(k)
                     + ")=" + to_string(x);
              }
              if (d.structural_reason) {
                s += " reason: " + *d.structural_reason;
              }
              return s;
            },
            [](RefutedUpToBound const& r) {
              return "RefutedUpToBound t=" + std::to_string(r.target_index)
                     + " k<=" + std::to_string(r.probe_bound);
            }},
        v);
  }

}  // namespace bicyclic
