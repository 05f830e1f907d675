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

// Continuity of shifts and of multiplication relative to a topology given by
// basic-neighbourhood chains.
//
// Terminology: the left shift by s is x -> s x. Continuity of every left
// shift makes a right topological semigroup (a right-continuous topology);
// continuity of every right shift x -> x s makes a left topological
// semigroup.
//
// A shift f is continuous at x for target index t when f(V_k(x)) is inside
// V_t(f(x)) for some k. Images are computed exactly in the SymSet algebra, so
// a found k is a proof. Discontinuity is certified structurally: the image of
// every V_k(x) contains an infinite tail whose line or residue class no
// V_t(f(x)) can absorb.

#ifndef BICYCLIC_CONTINUITY_HPP_
#define BICYCLIC_CONTINUITY_HPP_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bicyclic/sweep.hpp"
#include "bicyclic/topology.hpp"

namespace bicyclic {

  enum class ShiftSide { LeftShift, RightShift };

  [[nodiscard]] std::string_view to_string(ShiftSide side) noexcept;

  struct ContinuousAt {
    //! target index t -> source index k(t)
    std::map<index_t, index_t> modulus;
  };

  struct DiscontinuousAt {
    index_t target_index = 0;
    //! source index k -> element of image(V_k) outside the target set
    std::map<index_t, Element> counterexamples;
    //! Present when the failure is proved for every k, not just k <= k_max.
    std::optional<std::string> structural_reason;
  };

  struct RefutedUpToBound {
    index_t                    target_index = 0;
    index_t                    probe_bound  = 0;
    std::map<index_t, Element> counterexamples;
  };

  using Verdict = std::variant<ContinuousAt, DiscontinuousAt, RefutedUpToBound>;

  [[nodiscard]] bool             is_continuous(Verdict const& v) noexcept;
  [[nodiscard]] std::string_view verdict_name(Verdict const& v) noexcept;

  inline constexpr index_t kDefaultKMax = 12;

  //! s x for LeftShift, x s for RightShift.
  [[nodiscard]] Element apply_shift(ShiftSide side, Element s, Element x);

  [[nodiscard]] SymSet shift_image(ShiftSide side, Element s, SymSet const& S);

  //! A reason why no V_k(x) maps into V_t(shifted), valid for every k, or
  //! nullopt when no structural obstruction applies.
  [[nodiscard]] std::optional<std::string>
  structural_obstruction(TopologyDescriptor const& top,
                         ShiftSide                 side,
                         Element                   s,
                         Element                   x,
                         index_t                   t);

  [[nodiscard]] Verdict check_shift_at(TopologyDescriptor const& top,
                                       ShiftSide                 side,
                                       Element                   s,
                                       Element                   x,
                                       index_t                   t,
                                       index_t k_max = kDefaultKMax);

  struct ShiftCell {
    Element s;
    Element x;
    index_t t = 0;
    Verdict verdict;
  };

  struct ShiftReport {
    std::vector<ShiftCell> cells;

    [[nodiscard]] std::size_t continuous() const noexcept;
    [[nodiscard]] std::size_t discontinuous() const noexcept;
    [[nodiscard]] std::size_t refuted() const noexcept;
  };

  //! All (s, x) with s, x and the shifted point in the carrier and
  //! coordinates <= bound, in lexicographic order.
  [[nodiscard]] std::vector<std::pair<Element, Element>>
  shift_grid(TopologyDescriptor const& top, ShiftSide side, index_t bound);

  //! Runs check_shift_at over sample x {1..t_max}; cells are ordered by
  //! sample position, then t.
  [[nodiscard]] ShiftReport
  check_shift(TopologyDescriptor const&                   top,
              ShiftSide                                   side,
              std::span<std::pair<Element, Element> const> sample,
              index_t                                     t_max,
              index_t                                     k_max = kDefaultKMax,
              Execution exec = Execution::Parallel);

  //! Is V_k(x) V_k(y) inside V_t(x y) for some k?
  [[nodiscard]] Verdict check_joint_at(TopologyDescriptor const& top,
                                       Element                   x,
                                       Element                   y,
                                       index_t                   t,
                                       index_t k_max = kDefaultKMax);

  enum class Containment { Equal, Strict, Fails };

  [[nodiscard]] std::string_view to_string(Containment c) noexcept;

  struct JointCell {
    Element     x;
    Element     y;
    index_t     t = 0;
    Verdict     verdict;
    //! 1: both isolated, 2: only x isolated, 3: only y isolated, 4: neither.
    int         isolation_case = 0;
    //! V_t(x) V_t(y) against V_t(x y).
    Containment containment = Containment::Fails;
  };

  struct CaseSummary {
    std::size_t cells      = 0;
    std::size_t continuous = 0;
    std::size_t equal      = 0;
    std::size_t strict     = 0;
  };

  struct Prop2Report {
    index_t                    p = 0, m = 0, n = 0, bound = 0, t_max = 0;
    std::vector<JointCell>     cells;
    std::array<CaseSummary, 4> cases{};

    [[nodiscard]] bool all_continuous() const noexcept;
  };

  //! Joint continuity of the window p-adic topology on every pair of
  //! carrier points with coordinates <= bound, t = 1..t_max.
  [[nodiscard]] Prop2Report verify_prop2(index_t   p,
                                         index_t   m,
                                         index_t   n,
                                         index_t   bound,
                                         index_t   t_max = 3,
                                         index_t   k_max = kDefaultKMax,
                                         Execution exec = Execution::Parallel);

  struct DiscontinuityWitness {
    Element         s;
    Element         x;
    index_t         t = 0;
    DiscontinuousAt verdict;
  };

  //! First structurally certified discontinuity in the order (s.k + s.l +
  //! x.k + x.l, s, x, t) over carrier points with coordinates <= bound and
  //! t <= bound.
  [[nodiscard]] std::optional<DiscontinuityWitness>
  find_discontinuity(TopologyDescriptor const& top,
                     ShiftSide                 side,
                     index_t                   bound,
                     index_t                   k_max = kDefaultKMax,
                     Execution                 exec  = Execution::Parallel);

  // b^x0 a^(y0+i0-j0) · b^i0 a^j0 = b^x0 a^y0 for y0 - j0 > x0 and i0 <= j0,
  // the finite solution set of b^x0 a^(y0+i0-j0) X = b^x0 a^y0, and the
  // finite block { b^i a^j in CPlus : i + j <= 2(j0 + 1) }.
  struct Thm2Replay {
    Element              left_factor;
    Element              rhs;
    Element              point;
    Element              product;
    ElementSet           solutions;
    std::vector<Element> block;
    bool                 product_ok             = false;
    bool                 solutions_contain_point = false;
    bool                 block_contains_point   = false;
    //! b^i0 a^j0 is outside the retract b^(j0+1) a^(j0+1) CPlus.
    bool retract_excludes_point = false;

    [[nodiscard]] bool ok() const noexcept {
      return product_ok && solutions_contain_point && block_contains_point
             && retract_excludes_point;
    }
  };

  [[nodiscard]] Thm2Replay
  thm2_equation_replay(index_t x0, index_t y0, index_t i0, index_t j0);

}  // namespace bicyclic

#endif  // BICYCLIC_CONTINUITY_HPP_
