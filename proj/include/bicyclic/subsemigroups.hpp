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

// Named subsemigroups of the bicyclic monoid, bounded enumeration and
// closure, and the finite computations about idempotents and retractions
// that show these subsemigroups carry only discrete shift-continuous
// Hausdorff topologies.

#ifndef BICYCLIC_SUBSEMIGROUPS_HPP_
#define BICYCLIC_SUBSEMIGROUPS_HPP_

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bicyclic/element.hpp"

namespace bicyclic {

  namespace family {
    struct Full {
      bool operator==(Full const&) const = default;
    };
    //! b^i a^j with i <= j
    struct CPlus {
      bool operator==(CPlus const&) const = default;
    };
    //! b^i a^j with i >= j
    struct CMinus {
      bool operator==(CMinus const&) const = default;
    };
    //! { b^n a^(n+i) : i in omega }
    struct CPlusRow {
      index_t n = 0;
      bool    operator==(CPlusRow const&) const = default;
    };
    //! Union of the rows m..n of CPlus.
    struct CPlusWindow {
      index_t m = 0;
      index_t n = 0;
      bool    operator==(CPlusWindow const&) const = default;
    };
    //! { b^n a^n : n in omega }
    struct IdempotentChain {
      bool operator==(IdempotentChain const&) const = default;
    };
    struct FinitelyGenerated {
      std::vector<Element> gens;
      bool operator==(FinitelyGenerated const&) const = default;
    };
  }  // namespace family

  using SetDescriptor = std::variant<family::Full,
                                     family::CPlus,
                                     family::CMinus,
                                     family::CPlusRow,
                                     family::CPlusWindow,
                                     family::IdempotentChain,
                                     family::FinitelyGenerated>;

  //! Throws PreconditionError unless m <= n.
  [[nodiscard]] SetDescriptor make_window(index_t m, index_t n);

  //! Throws PreconditionError if the descriptor is malformed (a window with
  //! m > n, an empty generator list).
  void validate(SetDescriptor const& desc);

  struct Membership {
    bool member = false;
    //! Set when the answer rests on a closure that was cut off at a bound
    //! (only possible for FinitelyGenerated).
    bool bounded_evidence = false;
  };

  //! Membership test. Exact for the closed-form families. For
  //! FinitelyGenerated it runs closure() with `closure_bound` (0 picks twice
  //! the largest coordinate of x and the generators): a hit is exact, a miss
  //! is exact only if the closure saturated.
  [[nodiscard]] Membership contains(SetDescriptor const& desc,
                                    Element              x,
                                    index_t              closure_bound = 0);

  //! Shorthand for contains(...).member on closed-form families.
  [[nodiscard]] bool is_member(SetDescriptor const& desc, Element x);

  //! Members with max(k, l) <= bound in lexicographic order.
  [[nodiscard]] std::vector<Element> enumerate(SetDescriptor const& desc,
                                               index_t              bound);

  struct Closure {
    std::set<Element> elements;
    //! No product of two elements was discarded for exceeding the bound, so
    //! `elements` is the whole generated subsemigroup.
    bool saturated = true;
  };

  [[nodiscard]] Closure closure(std::span<Element const> gens, index_t bound);

  // Infinitely many idempotents from one element on each side of the
  // diagonal. With u = b^i a^(i+k) and v = b^(j+l) a^j (k, l > 0),
  // u^(lp) = b^i a^(i+klp), v^(kp) = b^(j+klp) a^j, and both products of
  // those powers are idempotents.

  struct Prop1Member {
    index_t p = 0;
    Element u_power;  // u^(l p)
    Element v_power;  // v^(k p)
    Element uv;       // u^(lp) v^(kp)
    Element vu;       // v^(kp) u^(lp)
    Element expected_uv;
    Element expected_vu;
    bool    ok = false;
  };

  struct Prop1Family {
    index_t i = 0, j = 0, k = 0, l = 0;
    //! Family member at p is b^(base + klp) a^(base + klp); base is
    //! max(i, j), the index that v^(kp) u^(lp) actually produces.
    index_t                  base = 0;
    index_t                  kl   = 0;
    std::vector<Prop1Member> prefix;

    [[nodiscard]] Element member(index_t p) const;
    [[nodiscard]] bool    verified() const;
  };

  //! Throws PreconditionError unless u is strictly above and v strictly below
  //! the diagonal.
  [[nodiscard]] Prop1Family prop1_idempotent_family(Element     u,
                                                    Element     v,
                                                    std::size_t count = 5);

  enum class CensusVerdict { Finite, Infinite, BoundedEvidence };

  [[nodiscard]] std::string_view to_string(CensusVerdict v) noexcept;

  struct Census {
    std::size_t   count = 0;
    CensusVerdict verdict;
    //! Strictly-above / strictly-below pair whose family certifies Infinite.
    std::optional<std::pair<Element, Element>> witness;
    std::string                                reason;
  };

  [[nodiscard]] Census idempotent_census(SetDescriptor const& desc,
                                         index_t              bound);

  // Open finite neighbourhood of a point in a subsemigroup with infinitely
  // many idempotents: for an idempotent e = b^i0 a^i0 with i0 > max(k, l)
  // the maps z -> z e and z -> e z are retractions of S, and the
  // complement A of S e union e S is {b^k a^l in S : k, l < i0}.

  struct Thm1Neighborhood {
    index_t              i0 = 0;
    std::vector<Element> a_set;
    //! A equals { z in S : z.k < i0 and z.l < i0 } on the window.
    bool characterization_ok = false;
    bool contains_point      = false;
    //! Both translations by e map the window into S and are idempotent.
    bool retractions_ok = false;

    [[nodiscard]] bool verified() const noexcept {
      return characterization_ok && contains_point && retractions_ok;
    }
  };

  //! Throws PreconditionError if x is not in desc or no idempotent with
  //! index in (max(k, l), bound] lies in desc.
  [[nodiscard]] Thm1Neighborhood
  thm1_neighborhood(SetDescriptor const& desc, Element x, index_t bound);

  //! b^s a^(s+i) -> b^(s-m) a^(s-m+i), from the rows m..n of CPlus onto the
  //! rows 0..n-m.
  [[nodiscard]] Element window_iso(index_t m, index_t n, Element x);

  //! Inversion, an anti-isomorphism carrying CPlus onto CMinus.
  [[nodiscard]] constexpr Element anti_iso(Element x) noexcept {
    return invert(x);
  }

  // Grammar: `full`, `cplus`, `cminus`, `cplus-row:<n>`,
  // `cplus-window:<m>:<n>`, `idem`, `gen:<elem>,<elem>,...`.
  [[nodiscard]] std::string   to_string(SetDescriptor const& desc);
  [[nodiscard]] SetDescriptor parse_descriptor(std::string_view text,
                                               index_t cap
                                               = kDefaultExponentCap);

}  // namespace bicyclic

#endif  // BICYCLIC_SUBSEMIGROUPS_HPP_
