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

// Exact algebra of the infinite subsets of the bicyclic monoid that occur as
// basic neighbourhoods and their images: finite unions of singletons and
// one-parameter arithmetic-progression tails along a row (fixed b-exponent)
// or a column (fixed a-exponent).
//
// Text form: `{b^0 a^7}` for a singleton, `{b^0 a^(3+2t)}` for a row tail,
// `{b^(3+2t) a^0}` for a column tail, joined by ` ∪ `; `∅` is the empty set.

#ifndef BICYCLIC_SYMSET_HPP_
#define BICYCLIC_SYMSET_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bicyclic/element.hpp"

namespace bicyclic {

  struct Single {
    Element e;
    constexpr auto operator<=>(Single const&) const = default;
  };

  //! { b^row a^(base + step t) : t in omega }
  struct RowTail {
    index_t row  = 0;
    index_t base = 0;
    index_t step = 1;
    constexpr auto operator<=>(RowTail const&) const = default;
  };

  //! { b^(base + step t) a^col : t in omega }
  struct ColTail {
    index_t col  = 0;
    index_t base = 0;
    index_t step = 1;
    constexpr auto operator<=>(ColTail const&) const = default;
  };

  using Atom = std::variant<Single, RowTail, ColTail>;

  [[nodiscard]] bool member(Atom const& a, Element x);

  [[nodiscard]] bool is_tail(Atom const& a) noexcept;

  //! The t-th member of an atom (t = 0 for a Single).
  [[nodiscard]] Element nth_member(Atom const& a, index_t t);

  //! The first `count` members in parameter order (one for a Single).
  [[nodiscard]] std::vector<Element> first_members(Atom const& a,
                                                   std::size_t count);

  //! Image under inversion; swaps row and column tails.
  [[nodiscard]] Atom invert(Atom const& a);

  class SymSet {
   public:
    SymSet() = default;
    //! Throws PreconditionError on a tail with step 0.
    explicit SymSet(std::vector<Atom> atoms);
    SymSet(std::initializer_list<Atom> atoms)
        : SymSet(std::vector<Atom>(atoms)) {}

    [[nodiscard]] std::span<Atom const> atoms() const noexcept {
      return atoms_;
    }

    [[nodiscard]] bool empty() const noexcept {
      return atoms_.empty();
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return atoms_.size();
    }

    //! Structural equality of the atom lists; compare canonical forms for
    //! equality of denotations.
    friend bool operator==(SymSet const&, SymSet const&) = default;

   private:
    std::vector<Atom> atoms_;
  };

  [[nodiscard]] bool member(SymSet const& s, Element x);

  struct SubsetCertificate {
    bool holds = false;
    //! An element of A outside B when !holds.
    std::optional<Element> counterexample;
    //! Largest number of leading parameter values examined for a single tail
    //! atom of A. Past it, membership of that tail's elements in B repeats
    //! with period lcm(steps of B's tails on the same line), so a check of
    //! this many members is a complete proof.
    index_t covering_bound = 0;
  };

  [[nodiscard]] SubsetCertificate subset(SymSet const& a, SymSet const& b);

  //! Number of leading members of `tail` that decide `tail` subset of `b`.
  [[nodiscard]] index_t covering_bound(Atom const& tail, SymSet const& b);

  //! { s x : x in S }
  [[nodiscard]] SymSet left_image(Element s, SymSet const& S);
  //! { x s : x in S }
  [[nodiscard]] SymSet right_image(SymSet const& S, Element s);
  //! { x y : x in A, y in B }. A column tail followed by a row tail
  //! multiplies to a two-dimensional grid; that pair throws
  //! UnrepresentableError.
  [[nodiscard]] SymSet product(SymSet const& A, SymSet const& B);

  //! Same denotation; no atom contained in another, singles adjacent to the
  //! front of a tail folded into it, atoms sorted. Idempotent.
  [[nodiscard]] SymSet canonicalize(SymSet S);

  [[nodiscard]] SymSet unite(SymSet const& A, SymSet const& B);

  //! Image under inversion (the anti-isomorphism of the monoid).
  [[nodiscard]] SymSet invert(SymSet const& S);

  [[nodiscard]] bool disjoint(SymSet const& A, SymSet const& B);

  //! The additive monoid { d1 t1 + d2 t2 } = gcd * ({exceptional} union
  //! [conductor, oo)).
  struct NumericalSemigroup {
    index_t              gcd       = 1;
    index_t              conductor = 0;
    std::vector<index_t> exceptional;  // members below the conductor
  };

  [[nodiscard]] NumericalSemigroup numerical_semigroup(index_t d1,
                                                       index_t d2);

  [[nodiscard]] std::string to_string(Atom const& a);
  [[nodiscard]] std::string to_string(SymSet const& s);
  [[nodiscard]] SymSet      parse_symset(std::string_view text,
                                         index_t cap = kDefaultExponentCap);

}  // namespace bicyclic

#endif  // BICYCLIC_SYMSET_HPP_
