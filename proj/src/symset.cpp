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

#include "bicyclic/symset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "text.hpp"

namespace bicyclic {

  using detail::checked_add;
  using detail::checked_mul;

  namespace {

    template <class... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };

    // Least base + step t that is >= bound.
    index_t first_at_least(index_t base, index_t step, index_t bound) {
      if (base >= bound) {
        return base;
      }
      index_t const t = (bound - base + step - 1) / step;
      return checked_add(base, checked_mul(t, step));
    }

    bool on_progression(index_t e, index_t base, index_t step) {
      return e >= base && (e - base) % step == 0;
    }

    index_t checked_lcm(index_t a, index_t b) {
      return checked_mul(a / std::gcd(a, b), b);
    }

    // Covering bounds above this are refused rather than enumerated.
    constexpr index_t kMaxCoveringBound = 50'000'000;

    void left_image_atom(Element s, Atom const& atom, std::vector<Atom>& out) {
      std::visit(
          overloaded{
              [&](Single const& a) { out.emplace_back(Single{s * a.e}); },
              [&](RowTail const& a) {
                if (s.l < a.row) {
                  out.emplace_back(
                      RowTail{checked_add(s.k, a.row - s.l), a.base, a.step});
                } else if (s.l == a.row) {
                  out.emplace_back(RowTail{s.k, a.base, a.step});
                } else {
                  out.emplace_back(RowTail{
                      s.k, checked_add(s.l - a.row, a.base), a.step});
                }
              },
              [&](ColTail const& a) {
                // Members (m, col): m < s.l lands in row s.k, m >= s.l
                // shifts the column tail by s.k - s.l.
                for (index_t m = a.base; m < s.l; m += a.step) {
                  out.emplace_back(Single{s * Element{m, a.col}});
                }
                index_t const m0 = first_at_least(a.base, a.step, s.l);
                out.emplace_back(
                    ColTail{a.col, checked_add(s.k, m0 - s.l), a.step});
              }},
          atom);
    }

    void right_image_atom(Atom const& atom, Element s, std::vector<Atom>& out) {
      std::visit(
          overloaded{
              [&](Single const& a) { out.emplace_back(Single{a.e * s}); },
              [&](RowTail const& a) {
                // Members (row, e): e < s.k are pushed into column s.l, the
                // rest stay in the row shifted by s.l - s.k.
                for (index_t e = a.base; e < s.k; e += a.step) {
                  out.emplace_back(Single{Element{a.row, e} * s});
                }
                index_t const e0 = first_at_least(a.base, a.step, s.k);
                out.emplace_back(
                    RowTail{a.row, checked_add(e0 - s.k, s.l), a.step});
              },
              [&](ColTail const& a) {
                if (a.col < s.k) {
                  out.emplace_back(ColTail{
                      s.l, checked_add(a.base, s.k - a.col), a.step});
                } else if (a.col == s.k) {
                  out.emplace_back(ColTail{s.l, a.base, a.step});
                } else {
                  out.emplace_back(ColTail{
                      checked_add(a.col - s.k, s.l), a.base, a.step});
                }
              }},
          atom);
    }

    void row_times_row(RowTail const& x, RowTail const& y,
                       std::vector<Atom>& out) {
      // Left exponents below y.row: each is a single left factor.
      for (index_t e = x.base; e < y.row; e += x.step) {
        left_image_atom(Element{x.row, e}, y, out);
      }
      // Left exponent e >= y.row: b^x.row a^(e - y.row + f), f on y.
      index_t const f1    = first_at_least(x.base, x.step, y.row);
      index_t const start = checked_add(f1 - y.row, y.base);
      auto const    ns    = numerical_semigroup(x.step, y.step);
      for (index_t v : ns.exceptional) {
        out.emplace_back(
            Single{Element{x.row, checked_add(start, checked_mul(ns.gcd, v))}});
      }
      out.emplace_back(RowTail{
          x.row, checked_add(start, checked_mul(ns.gcd, ns.conductor)), ns.gcd});
    }

    void row_times_col(RowTail const& x, ColTail const& y,
                       std::vector<Atom>& out) {
      // (row, e) (f, col) is (row + f - e, col) when f >= e and
      // (row, col + e - f) otherwise. The differences f - e run over the
      // whole class (y.base - x.base) + g Z.
      index_t const g   = std::gcd(x.step, y.step);
      index_t const up  = (y.base % g + g - x.base % g) % g;
      index_t const res = (x.base % g + g - y.base % g) % g;
      index_t const dn  = res == 0 ? g : res;
      out.emplace_back(ColTail{y.col, checked_add(x.row, up), g});
      out.emplace_back(RowTail{x.row, checked_add(y.col, dn), g});
    }

    void product_atoms(Atom const& x, Atom const& y, std::vector<Atom>& out);

    void col_times_col(ColTail const& x, ColTail const& y,
                       std::vector<Atom>& out) {
      // (x y)^-1 = y^-1 x^-1 and inversion swaps column and row tails.
      std::vector<Atom> tmp;
      row_times_row(std::get<RowTail>(invert(Atom{y})),
                    std::get<RowTail>(invert(Atom{x})),
                    tmp);
      for (auto const& a : tmp) {
        out.push_back(invert(a));
      }
    }

    void product_atoms(Atom const& x, Atom const& y, std::vector<Atom>& out) {
      if (auto const* sx = std::get_if<Single>(&x)) {
        left_image_atom(sx->e, y, out);
      } else if (auto const* sy = std::get_if<Single>(&y)) {
        right_image_atom(x, sy->e, out);
      } else if (auto const* rx = std::get_if<RowTail>(&x)) {
        if (auto const* ry = std::get_if<RowTail>(&y)) {
          row_times_row(*rx, *ry, out);
        } else {
          row_times_col(*rx, std::get<ColTail>(y), out);
        }
      } else if (auto const* cy = std::get_if<ColTail>(&y)) {
        col_times_col(std::get<ColTail>(x), *cy, out);
      } else {
        throw UnrepresentableError("product: " + to_string(x) + " · "
                                   + to_string(y)
                                   + " is a two-dimensional grid");
      }
    }

    // Row-tail version of subset; column tails are handled by inversion.
    index_t row_covering_bound(RowTail const& t, SymSet const& b) {
      index_t irregular = 0;
      index_t period    = 1;
      for (auto const& atom : b.atoms()) {
        std::visit(overloaded{[&](Single const& a) {
                                if (a.e.k == t.row) {
                                  irregular = std::max(irregular, a.e.l);
                                }
                              },
                              [&](RowTail const& a) {
                                if (a.row == t.row) {
                                  irregular = std::max(irregular, a.base);
                                  period    = checked_lcm(period, a.step);
                                }
                              },
                              [&](ColTail const& a) {
                                if (on_progression(t.row, a.base, a.step)) {
                                  irregular = std::max(irregular, a.col);
                                }
                              }},
                   atom);
      }
      // Past the irregular part, membership in the row depends only on the
      // exponent modulo `period`, and t.base + t.step * i runs through its
      // residues with period dividing `period`.
      index_t const first_regular
          = t.base > irregular ? 0 : (irregular - t.base) / t.step + 1;
      return checked_add(first_regular, period);
    }

    bool atom_contains(Atom const& big, Atom const& small) {
      if (auto const* s = std::get_if<Single>(&small)) {
        return member(big, s->e);
      }
      if (auto const* a = std::get_if<RowTail>(&small)) {
        auto const* b = std::get_if<RowTail>(&big);
        return b != nullptr && a->row == b->row && a->step % b->step == 0
               && on_progression(a->base, b->base, b->step);
      }
      auto const& a = std::get<ColTail>(small);
      auto const* b = std::get_if<ColTail>(&big);
      return b != nullptr && a.col == b->col && a.step % b->step == 0
             && on_progression(a.base, b->base, b->step);
    }

    bool atoms_meet(Atom const& x, Atom const& y) {
      if (auto const* s = std::get_if<Single>(&x)) {
        return member(y, s->e);
      }
      if (auto const* s = std::get_if<Single>(&y)) {
        return member(x, s->e);
      }
      auto const* rx = std::get_if<RowTail>(&x);
      auto const* ry = std::get_if<RowTail>(&y);
      if (rx != nullptr && ry != nullptr) {
        if (rx->row != ry->row) {
          return false;
        }
        index_t const g = std::gcd(rx->step, ry->step);
        return rx->base % g == ry->base % g;
      }
      auto const* cx = std::get_if<ColTail>(&x);
      auto const* cy = std::get_if<ColTail>(&y);
      if (cx != nullptr && cy != nullptr) {
        return atoms_meet(invert(x), invert(y));
      }
      // One row tail and one column tail share at most their crossing point.
      RowTail const& r = rx != nullptr ? *rx : *ry;
      ColTail const& c = cx != nullptr ? *cx : *cy;
      Element const  p{r.row, c.col};
      return member(Atom{r}, p) && member(Atom{c}, p);
    }

    // Folds a single sitting one step before the front of a tail into it.
    bool extend_tails(std::vector<Atom>& atoms) {
      bool changed = false;
      for (auto& atom : atoms) {
        auto* r = std::get_if<RowTail>(&atom);
        auto* c = std::get_if<ColTail>(&atom);
        if (r == nullptr && c == nullptr) {
          continue;
        }
        while (true) {
          index_t const base = r ? r->base : c->base;
          index_t const step = r ? r->step : c->step;
          if (base < step) {
            break;
          }
          Element const before = r ? Element{r->row, base - step}
                                   : Element{base - step, c->col};
          auto const it
              = std::find(atoms.begin(), atoms.end(), Atom{Single{before}});
          if (it == atoms.end()) {
            break;
          }
          (r ? r->base : c->base) = base - step;
          *it                     = atom;  // duplicate, removed below
          changed                 = true;
        }
      }
      return changed;
    }

  }  // namespace

  bool member(Atom const& a, Element x) {
    return std::visit(
        overloaded{[&](Single const& s) { return s.e == x; },
                   [&](RowTail const& r) {
                     return x.k == r.row && on_progression(x.l, r.base, r.step);
                   },
                   [&](ColTail const& c) {
                     return x.l == c.col && on_progression(x.k, c.base, c.step);
                   }},
        a);
  }

  bool is_tail(Atom const& a) noexcept {
    return !std::holds_alternative<Single>(a);
  }

  Element nth_member(Atom const& a, index_t t) {
    return std::visit(
        overloaded{[](Single const& s) { return s.e; },
                   [&](RowTail const& r) {
                     return Element{
                         r.row, checked_add(r.base, checked_mul(r.step, t))};
                   },
                   [&](ColTail const& c) {
                     return Element{
                         checked_add(c.base, checked_mul(c.step, t)), c.col};
                   }},
        a);
  }

  std::vector<Element> first_members(Atom const& a, std::size_t count) {
    if (std::holds_alternative<Single>(a)) {
      return {std::get<Single>(a).e};
    }
    std::vector<Element> out;
    out.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
      out.push_back(nth_member(a, t));
    }
    return out;
  }

  Atom invert(Atom const& a) {
    return std::visit(
        overloaded{
            [](Single const& s) -> Atom { return Single{invert(s.e)}; },
            [](RowTail const& r) -> Atom {
              return ColTail{r.row, r.base, r.step};
            },
            [](ColTail const& c) -> Atom {
              return RowTail{c.col, c.base, c.step};
            }},
        a);
  }

  SymSet::SymSet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    for (auto const& a : atoms_) {
      bool const zero_step
          = std::visit(overloaded{[](Single const&) { return false; },
                                  [](auto const& t) { return t.step == 0; }},
                       a);
      if (zero_step) {
        throw PreconditionError("SymSet: tail step must be positive");
      }
    }
  }

  bool member(SymSet const& s, Element x) {
    return std::any_of(s.atoms().begin(), s.atoms().end(), [&](Atom const& a) {
      return member(a, x);
    });
  }

  index_t covering_bound(Atom const& tail, SymSet const& b) {
    if (auto const* r = std::get_if<RowTail>(&tail)) {
      return row_covering_bound(*r, b);
    }
    if (auto const* c = std::get_if<ColTail>(&tail)) {
      return row_covering_bound(RowTail{c->col, c->base, c->step}, invert(b));
    }
    return 1;
  }

  SubsetCertificate subset(SymSet const& a, SymSet const& b) {
    SubsetCertificate cert;
    cert.holds = true;
    for (auto const& atom : a.atoms()) {
      index_t const bound = covering_bound(atom, b);
      if (bound > kMaxCoveringBound) {
        throw std::length_error("subset: covering bound "
                                + std::to_string(bound) + " too large");
      }
      cert.covering_bound = std::max(cert.covering_bound, bound);
      for (index_t t = 0; t < bound; ++t) {
        Element const x = nth_member(atom, t);
        if (!member(b, x)) {
          cert.holds          = false;
          cert.counterexample = x;
          return cert;
        }
      }
    }
    return cert;
  }

  SymSet left_image(Element s, SymSet const& S) {
    std::vector<Atom> out;
    for (auto const& atom : S.atoms()) {
      left_image_atom(s, atom, out);
    }
    return canonicalize(SymSet(std::move(out)));
  }

  SymSet right_image(SymSet const& S, Element s) {
    std::vector<Atom> out;
    for (auto const& atom : S.atoms()) {
      right_image_atom(atom, s, out);
    }
    return canonicalize(SymSet(std::move(out)));
  }

  SymSet product(SymSet const& A, SymSet const& B) {
    std::vector<Atom> out;
    for (auto const& x : A.atoms()) {
      for (auto const& y : B.atoms()) {
        product_atoms(x, y, out);
      }
    }
    return canonicalize(SymSet(std::move(out)));
  }

  SymSet canonicalize(SymSet S) {
    std::vector<Atom> atoms(S.atoms().begin(), S.atoms().end());
    bool              changed = true;
    while (changed) {
      std::sort(atoms.begin(), atoms.end());
      atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
      changed = extend_tails(atoms);
      std::sort(atoms.begin(), atoms.end());
      atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
      std::vector<Atom> kept;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        bool absorbed = false;
        for (std::size_t j = 0; j < atoms.size() && !absorbed; ++j) {
          absorbed = i != j && atom_contains(atoms[j], atoms[i]);
        }
        if (absorbed) {
          changed = true;
        } else {
          kept.push_back(atoms[i]);
        }
      }
      atoms = std::move(kept);
    }
    return SymSet(std::move(atoms));
  }

  SymSet unite(SymSet const& A, SymSet const& B) {
    std::vector<Atom> atoms(A.atoms().begin(), A.atoms().end());
    atoms.insert(atoms.end(), B.atoms().begin(), B.atoms().end());
    return canonicalize(SymSet(std::move(atoms)));
  }

  SymSet invert(SymSet const& S) {
    std::vector<Atom> atoms;
    atoms.reserve(S.size());
    for (auto const& a : S.atoms()) {
      atoms.push_back(invert(a));
    }
    return canonicalize(SymSet(std::move(atoms)));
  }

  bool disjoint(SymSet const& A, SymSet const& B) {
    for (auto const& x : A.atoms()) {
      for (auto const& y : B.atoms()) {
        if (atoms_meet(x, y)) {
          return false;
        }
      }
    }
    return true;
  }

  NumericalSemigroup numerical_semigroup(index_t d1, index_t d2) {
    if (d1 == 0 || d2 == 0) {
      throw PreconditionError("numerical_semigroup: generators must be "
                              "positive");
    }
    NumericalSemigroup ns;
    ns.gcd           = std::gcd(d1, d2);
    index_t const a1 = d1 / ns.gcd;
    index_t const a2 = d2 / ns.gcd;
    // Conductor (a1 - 1)(a2 - 1) = Frobenius number + 1.
    ns.conductor = checked_mul(a1 - 1, a2 - 1);
    if (ns.conductor > kMaxCoveringBound) {
      throw std::length_error("numerical_semigroup: conductor too large");
    }
    for (index_t v = 0; v < ns.conductor; ++v) {
      for (index_t t = 0; t * a1 <= v; ++t) {
        if ((v - t * a1) % a2 == 0) {
          ns.exceptional.push_back(v);
          break;
        }
      }
    }
    return ns;
  }

  std::string to_string(Atom const& a) {
    auto const prog = [](index_t base, index_t step) {
      return "(" + std::to_string(base) + "+" + std::to_string(step) + "t)";
    };
    return std::visit(
        overloaded{[](Single const& s) {
                     return "{b^" + std::to_string(s.e.k) + " a^"
                            + std::to_string(s.e.l) + "}";
                   },
                   [&](RowTail const& r) {
                     return "{b^" + std::to_string(r.row) + " a^"
                            + prog(r.base, r.step) + "}";
                   },
                   [&](ColTail const& c) {
                     return "{b^" + prog(c.base, c.step) + " a^"
                            + std::to_string(c.col) + "}";
                   }},
        a);
  }

  std::string to_string(SymSet const& s) {
    if (s.empty()) {
      return "∅";
    }
    std::string out;
    for (auto const& a : s.atoms()) {
      if (!out.empty()) {
        out += " ∪ ";
      }
      out += to_string(a);
    }
    return out;
  }

  namespace {
    struct Exponent {
      index_t base = 0;
      index_t step = 0;  // 0 for a fixed exponent
    };

    Exponent parse_exponent(text::Cursor& cur, index_t cap) {
      Exponent e;
      if (cur.accept('(')) {
        cur.skip_space();
        e.base = cur.uint(cap);
        cur.skip_space();
        cur.expect('+');
        cur.skip_space();
        e.step = cur.uint(cap);
        cur.skip_space();
        cur.expect('t');
        cur.skip_space();
        cur.expect(')');
        if (e.step == 0) {
          cur.fail("tail step must be positive");
        }
      } else {
        e.base = cur.uint(cap);
      }
      return e;
    }
  }  // namespace

  SymSet parse_symset(std::string_view input, index_t cap) {
    text::Cursor cur(input);
    cur.skip_space();
    std::vector<Atom> atoms;
    if (cur.accept("∅")) {
      cur.skip_space();
      cur.expect_end();
      return {};
    }
    while (true) {
      cur.expect('{');
      cur.skip_space();
      if (cur.accept('}')) {  // `{}` is the empty set
      } else {
        cur.expect('b');
        cur.expect('^');
        Exponent const k = parse_exponent(cur, cap);
        cur.skip_space();
        cur.expect('a');
        cur.expect('^');
        Exponent const l = parse_exponent(cur, cap);
        cur.skip_space();
        cur.expect('}');
        if (k.step != 0 && l.step != 0) {
          cur.fail("at most one exponent may be a progression");
        } else if (k.step != 0) {
          atoms.emplace_back(ColTail{l.base, k.base, k.step});
        } else if (l.step != 0) {
          atoms.emplace_back(RowTail{k.base, l.base, l.step});
        } else {
          atoms.emplace_back(Single{Element{k.base, l.base}});
        }
      }
      cur.skip_space();
      if (cur.at_end()) {
        break;
      }
      if (!cur.accept("∪") && !cur.accept('|')) {
        cur.fail("expected '∪' or '|'");
      }
      cur.skip_space();
    }
    return SymSet(std::move(atoms));
  }

}  // namespace bicyclic
