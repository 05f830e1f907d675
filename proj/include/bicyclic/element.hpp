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

// Exact arithmetic in the bicyclic monoid.
//
// The monoid is generated by p and q subject to pq = 1. Following the
// subsemigroup literature we also write a = p and b = q, so the normal form
// q^k p^l is rendered as b^k a^l. An Element stores the pair (k, l).

#ifndef BICYCLIC_ELEMENT_HPP_
#define BICYCLIC_ELEMENT_HPP_

#include <compare>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bicyclic/errors.hpp"

namespace bicyclic {

  //! Normal form b^k a^l (= q^k p^l).
  struct Element {
    index_t k = 0;
    index_t l = 0;

    constexpr auto operator<=>(Element const&) const = default;

    static constexpr Element identity() noexcept {
      return {};
    }
  };

  //! Letters of the presentation; P = a, Q = b.
  enum class Letter : char { P = 'P', Q = 'Q' };

  using Word = std::vector<Letter>;

  //! Finite set of elements, used for solution sets of equations.
  using ElementSet = std::set<Element>;

  enum class Half { PlusStrict, MinusStrict, Diagonal };

  [[nodiscard]] Element multiply(Element x, Element y);

  [[nodiscard]] inline Element operator*(Element x, Element y) {
    return multiply(x, y);
  }

  //! Normal form of a word, computed by deleting PQ factors until none is
  //! left. Independent of multiply().
  [[nodiscard]] Element reduce_word(std::span<Letter const> w);

  //! The word Q^k P^l.
  [[nodiscard]] Word to_word(Element x);

  [[nodiscard]] constexpr Element invert(Element x) noexcept {
    return {x.l, x.k};
  }

  [[nodiscard]] constexpr bool is_idempotent(Element x) noexcept {
    return x.k == x.l;
  }

  //! x^n for n >= 1. n = 0 is rejected with PreconditionError.
  [[nodiscard]] Element power(Element x, index_t n);

  //! Natural partial order: x <= y iff x = y e for some idempotent e.
  [[nodiscard]] bool natural_leq(Element x, Element y);

  //! All X with a * X = c.
  [[nodiscard]] ElementSet solve_left(Element a, Element c);

  //! All X with X * b = c.
  [[nodiscard]] ElementSet solve_right(Element c, Element b);

  [[nodiscard]] constexpr Half half_membership(Element x) noexcept {
    if (x.k < x.l) {
      return Half::PlusStrict;
    }
    return x.k > x.l ? Half::MinusStrict : Half::Diagonal;
  }

  [[nodiscard]] std::string_view to_string(Half h) noexcept;

  // Text grammar: `b^<uint>a^<uint>` (whitespace between the two factors is
  // allowed) or `1` for the identity.

  inline constexpr index_t kDefaultExponentCap = 1'000'000;

  [[nodiscard]] std::string to_string(Element x);

  std::ostream& operator<<(std::ostream& os, Element x);

  [[nodiscard]] Element parse_element(std::string_view text,
                                      index_t cap = kDefaultExponentCap);

  //! Parses a word over {P, Q}; `p`/`a` and `q`/`b` are accepted as aliases
  //! and `1` or the empty string denote the empty word.
  [[nodiscard]] Word parse_word(std::string_view text);

  [[nodiscard]] std::string to_string(std::span<Letter const> w);

}  // namespace bicyclic

#endif  // BICYCLIC_ELEMENT_HPP_
