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

// Structured (JSON) and line-oriented text renderings of results. The JSON
// field layout is documented in README.md.

#ifndef BICYCLIC_REPORT_HPP_
#define BICYCLIC_REPORT_HPP_

#include <string>

#include <json.hpp>

#include "bicyclic/continuity.hpp"
#include "bicyclic/verify.hpp"

namespace bicyclic {

  void to_json(nlohmann::ordered_json& j, Element const& x);
  void to_json(nlohmann::ordered_json& j, Atom const& a);
  void to_json(nlohmann::ordered_json& j, SymSet const& s);
  void to_json(nlohmann::ordered_json& j, SubsetCertificate const& c);
  void to_json(nlohmann::ordered_json& j, Closure const& c);
  void to_json(nlohmann::ordered_json& j, Census const& c);
  void to_json(nlohmann::ordered_json& j, Prop1Family const& f);
  void to_json(nlohmann::ordered_json& j, Thm1Neighborhood const& n);
  void to_json(nlohmann::ordered_json& j, Verdict const& v);
  void to_json(nlohmann::ordered_json& j, ShiftCell const& c);
  void to_json(nlohmann::ordered_json& j, ShiftReport const& r);
  void to_json(nlohmann::ordered_json& j, JointCell const& c);
  void to_json(nlohmann::ordered_json& j, Prop2Report const& r);
  void to_json(nlohmann::ordered_json& j, DiscontinuityWitness const& w);
  void to_json(nlohmann::ordered_json& j, Thm2Replay const& r);
  void to_json(nlohmann::ordered_json& j, SuiteReport const& r);

  //! One-line summary, e.g. `ContinuousAt k(3)=3`.
  [[nodiscard]] std::string describe(Verdict const& v);

}  // namespace bicyclic

#endif  // BICYCLIC_REPORT_HPP_
