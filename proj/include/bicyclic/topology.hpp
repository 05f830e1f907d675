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

// Topologies on subsemigroups of the bicyclic monoid, each given by a
// decreasing chain of basic neighbourhoods V_1 ⊇ V_2 ⊇ ... at every point.
//
//   Discrete(S)         V_k(x) = {x}
//   PAdicPlus(p)        on CPlus: the p-adic base a + p^k omega on omega,
//                       carried to row n by i -> b^n a^(n+i)
//   PAdicMinus(p)       on CMinus: the inversion image of PAdicPlus(p)
//   WindowPAdic(p,m,n)  on rows m..n of CPlus: b^i a^j isolated when
//                       j <= n, else V_k = {b^i a^(j + p^k t)}

#ifndef BICYCLIC_TOPOLOGY_HPP_
#define BICYCLIC_TOPOLOGY_HPP_

#include <string>
#include <string_view>
#include <variant>

#include "bicyclic/subsemigroups.hpp"
#include "bicyclic/symset.hpp"

namespace bicyclic {

  namespace topology {
    struct Discrete {
      SetDescriptor carrier = family::Full{};
    };
    struct PAdicPlus {
      index_t p = 2;
    };
    struct PAdicMinus {
      index_t p = 2;
    };
    struct WindowPAdic {
      index_t p = 2;
      index_t m = 0;
      index_t n = 0;
    };
  }  // namespace topology

  using TopologyDescriptor = std::variant<topology::Discrete,
                                          topology::PAdicPlus,
                                          topology::PAdicMinus,
                                          topology::WindowPAdic>;

  [[nodiscard]] bool is_prime(index_t p) noexcept;

  //! Throws PreconditionError on a non-prime p or a window with m > n.
  void validate(TopologyDescriptor const& top);

  [[nodiscard]] SetDescriptor carrier(TopologyDescriptor const& top);

  [[nodiscard]] bool in_carrier(TopologyDescriptor const& top, Element x);

  //! True when {x} is open (every basic neighbourhood is a singleton).
  [[nodiscard]] bool is_isolated(TopologyDescriptor const& top, Element x);

  //! V_idx(x), idx >= 1. Throws PreconditionError when x is outside the
  //! carrier or idx is 0.
  [[nodiscard]] SymSet
  basic_nbhd(TopologyDescriptor const& top, Element x, index_t idx);

  //! Carrier members with max(k, l) <= bound in lexicographic order.
  [[nodiscard]] std::vector<Element>
  carrier_points(TopologyDescriptor const& top, index_t bound);

  // Grammar: `discrete:<descriptor>`, `padic+:<p>`, `padic-:<p>`,
  // `window:<p>:<m>:<n>`.
  [[nodiscard]] std::string        to_string(TopologyDescriptor const& top);
  [[nodiscard]] TopologyDescriptor parse_topology(std::string_view text,
                                                  index_t          cap
                                                  = kDefaultExponentCap);

}  // namespace bicyclic

#endif  // BICYCLIC_TOPOLOGY_HPP_
