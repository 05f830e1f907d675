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

// Bundled verification suites behind `bicyclic verify <suite>`.

#ifndef BICYCLIC_VERIFY_HPP_
#define BICYCLIC_VERIFY_HPP_

#include <string>
#include <utility>
#include <vector>

#include "bicyclic/continuity.hpp"

namespace bicyclic {

  struct SuiteReport {
    SuiteReport() = default;
    explicit SuiteReport(std::string n) : name(std::move(n)) {}

    std::string              name;
    std::size_t              checks        = 0;
    std::size_t              failure_count = 0;
    std::vector<std::string> failures;  // at most kMaxListedFailures
    std::vector<std::string> notes;

    static constexpr std::size_t kMaxListedFailures = 20;

    [[nodiscard]] bool passed() const noexcept {
      return failure_count == 0;
    }

    void check(bool ok, std::string const& what);
    void merge(SuiteReport const& other);
  };

  //! multiply against word reduction, associativity, inverse axioms, powers,
  //! natural order and equation solving, exhaustively on small coordinates.
  [[nodiscard]] SuiteReport verify_core_oracle(index_t   bound = 12,
                                               Execution exec
                                               = Execution::Parallel);

  //! Idempotent families from every strict pair with coordinates <= bound,
  //! p <= max_p.
  [[nodiscard]] SuiteReport verify_prop1(index_t bound = 6, index_t max_p = 4);

  [[nodiscard]] SuiteReport
  verify_prop2_suite(index_t   p,
                     index_t   m,
                     index_t   n,
                     index_t   bound,
                     index_t   k_max = kDefaultKMax,
                     Execution exec  = Execution::Parallel);

  //! Open finite neighbourhoods in full, cplus, cminus and idem.
  [[nodiscard]] SuiteReport verify_thm1(index_t bound = 6);

  //! Equation replay for all admissible (x0, y0, i0, j0) <= bound.
  [[nodiscard]] SuiteReport verify_thm2(index_t bound = 8);

  //! Chain nesting, self-membership, carrier closure and separation for the
  //! topology descriptors over the given primes; continuity of the discrete
  //! topology.
  [[nodiscard]] SuiteReport verify_hausdorff(std::vector<index_t> const& primes
                                             = {2, 3},
                                             index_t   bound = 8,
                                             Execution exec
                                             = Execution::Parallel);

  //! The topology descriptors exercised by verify_hausdorff for prime p.
  [[nodiscard]] std::vector<TopologyDescriptor> sample_topologies(index_t p);

}  // namespace bicyclic

#endif  // BICYCLIC_VERIFY_HPP_
