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

#include "bicyclic/subsemigroups.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <memory>

#include "text.hpp"

namespace bicyclic {

  using detail::checked_add;
  using detail::checked_mul;

  namespace {
    template <class... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };

    index_t max_coordinate(std::span<Element const> xs) {
      index_t m = 0;
      for (auto const& x : xs) {
        m = std::max({m, x.k, x.l});
      }
      return m;
    }

    index_t default_closure_bound(family::FinitelyGenerated const& fg,
                                  Element                          x) {
      index_t const m = std::max({max_coordinate(fg.gens), x.k, x.l});
      return std::max<index_t>(1, checked_mul(m, 2));
    }

    bool closed_form_member(SetDescriptor const& desc, Element x) {
      return std::visit(
          overloaded{
              [](family::Full const&) { return true; },
              [&](family::CPlus const&) { return x.k <= x.l; },
              [&](family::CMinus const&) { return x.k >= x.l; },
              [&](family::CPlusRow const& r) {
                return x.k == r.n && x.l >= r.n;
              },
              [&](family::CPlusWindow const& w) {
                return x.k >= w.m && x.k <= w.n && x.l >= x.k;
              },
              [&](family::IdempotentChain const&) { return x.k == x.l; },
              [](family::FinitelyGenerated const&) -> bool {
                throw std::logic_error("closed_form_member: generated set");
              }},
          desc);
    }

    // Membership predicate valid for elements with coordinates <= bound.
    std::function<bool(Element)> member_predicate(SetDescriptor const& desc,
                                                  index_t bound) {
      if (auto const* fg = std::get_if<family::FinitelyGenerated>(&desc)) {
        auto set = std::make_shared<std::set<Element>>(
            closure(fg->gens, std::max(bound, max_coordinate(fg->gens)))
                .elements);
        return [set](Element x) { return set->contains(x); };
      }
      return [desc](Element x) { return closed_form_member(desc, x); };
    }

  }  // namespace

  SetDescriptor make_window(index_t m, index_t n) {
    SetDescriptor d = family::CPlusWindow{m, n};
    validate(d);
    return d;
  }

  void validate(SetDescriptor const& desc) {
    if (auto const* w = std::get_if<family::CPlusWindow>(&desc)) {
      if (w->m > w->n) {
        throw PreconditionError("cplus-window: requires m <= n, got m = "
                                + std::to_string(w->m)
                                + ", n = " + std::to_string(w->n));
      }
    } else if (auto const* fg = std::get_if<family::FinitelyGenerated>(&desc)) {
      if (fg->gens.empty()) {
        throw PreconditionError("gen: at least one generator is required");
      }
    }
  }

  Membership contains(SetDescriptor const& desc,
                      Element              x,
                      index_t              closure_bound) {
    validate(desc);
    auto const* fg = std::get_if<family::FinitelyGenerated>(&desc);
    if (fg == nullptr) {
      return {closed_form_member(desc, x), false};
    }
    index_t const bound
        = closure_bound == 0 ? default_closure_bound(*fg, x)
                             : std::max(closure_bound, max_coordinate(fg->gens));
    auto const c = closure(fg->gens, bound);
    if (c.elements.contains(x)) {
      return {true, false};
    }
    return {false, !c.saturated};
  }

  bool is_member(SetDescriptor const& desc, Element x) {
    return contains(desc, x).member;
  }

  std::vector<Element> enumerate(SetDescriptor const& desc, index_t bound) {
    validate(desc);
    if (bound == 0) {
      throw PreconditionError("enumerate: bound must be positive");
    }
    std::vector<Element> out;
    if (auto const* fg = std::get_if<family::FinitelyGenerated>(&desc)) {
      auto const c
          = closure(fg->gens, std::max(bound, max_coordinate(fg->gens)));
      for (auto const& x : c.elements) {
        if (x.k <= bound && x.l <= bound) {
          out.push_back(x);
        }
      }
      return out;
    }
    for (index_t k = 0; k <= bound; ++k) {
      for (index_t l = 0; l <= bound; ++l) {
        if (closed_form_member(desc, {k, l})) {
          out.push_back({k, l});
        }
      }
    }
    return out;
  }

  Closure closure(std::span<Element const> gens, index_t bound) {
    if (max_coordinate(gens) > bound) {
      throw PreconditionError("closure: bound " + std::to_string(bound)
                              + " is below a generator coordinate");
    }
    Closure              out;
    std::vector<Element> order;
    std::deque<Element>  pending;
    for (auto const& g : gens) {
      if (out.elements.insert(g).second) {
        order.push_back(g);
        pending.push_back(g);
      }
    }
    auto const add = [&](Element z) {
      if (z.k > bound || z.l > bound) {
        out.saturated = false;
      } else if (out.elements.insert(z).second) {
        order.push_back(z);
        pending.push_back(z);
      }
    };
    while (!pending.empty()) {
      Element const z = pending.front();
      pending.pop_front();
      for (std::size_t i = 0; i < order.size(); ++i) {
        Element const w = order[i];
        add(z * w);
        add(w * z);
      }
    }
    return out;
  }

  Element Prop1Family::member(index_t p) const {
    index_t const d = checked_add(base, checked_mul(kl, p));
    return {d, d};
  }

  bool Prop1Family::verified() const {
    return !prefix.empty()
           && std::all_of(prefix.begin(), prefix.end(), [](auto const& m) {
                return m.ok;
              });
  }

  Prop1Family
  prop1_idempotent_family(Element u, Element v, std::size_t count) {
    if (half_membership(u) != Half::PlusStrict) {
      throw PreconditionError("prop1-family: u = " + to_string(u)
                              + " must satisfy k < l");
    }
    if (half_membership(v) != Half::MinusStrict) {
      throw PreconditionError("prop1-family: v = " + to_string(v)
                              + " must satisfy k > l");
    }
    Prop1Family f;
    f.i    = u.k;
    f.k    = u.l - u.k;
    f.j    = v.l;
    f.l    = v.k - v.l;
    f.base = std::max(f.i, f.j);
    f.kl   = checked_mul(f.k, f.l);
    for (index_t p = 1; p <= count; ++p) {
      Prop1Member m;
      m.p             = p;
      index_t const d = checked_mul(f.kl, p);
      m.u_power       = power(u, checked_mul(f.l, p));
      m.v_power       = power(v, checked_mul(f.k, p));
      m.uv            = m.u_power * m.v_power;
      m.vu            = m.v_power * m.u_power;
      if (f.i < f.j) {
        m.expected_uv = {f.j, f.j};
      } else if (f.i == f.j) {
        m.expected_uv = {f.i, f.j};
      } else {
        m.expected_uv = {f.i, f.i};
      }
      index_t const id = checked_add(f.i, d);
      index_t const jd = checked_add(f.j, d);
      if (f.j < f.i) {
        m.expected_vu = {id, id};
      } else if (f.j == f.i) {
        m.expected_vu = {jd, id};
      } else {
        m.expected_vu = {jd, jd};
      }
      m.ok = m.u_power == Element{f.i, id} && m.v_power == Element{jd, f.j}
             && m.uv == m.expected_uv && m.vu == m.expected_vu
             && is_idempotent(m.uv) && is_idempotent(m.vu)
             && m.vu == f.member(p);
      f.prefix.push_back(m);
    }
    return f;
  }

  std::string_view to_string(CensusVerdict v) noexcept {
    switch (v) {
      case CensusVerdict::Finite:
        return "Finite";
      case CensusVerdict::Infinite:
        return "Infinite";
      case CensusVerdict::BoundedEvidence:
        return "BoundedEvidence";
    }
    return "?";
  }

  Census idempotent_census(SetDescriptor const& desc, index_t bound) {
    validate(desc);
    Census c;
    std::visit(
        overloaded{
            [&](family::CPlusRow const& r) {
              c.count   = r.n <= bound ? 1 : 0;
              c.verdict = CensusVerdict::Finite;
              c.reason  = "the only idempotent is b^" + std::to_string(r.n)
                         + "a^" + std::to_string(r.n);
            },
            [&](family::CPlusWindow const& w) {
              c.count   = w.m > bound ? 0 : std::min(w.n, bound) - w.m + 1;
              c.verdict = CensusVerdict::Finite;
              c.reason  = "idempotents are b^s a^s for m <= s <= n";
            },
            [&](family::FinitelyGenerated const& fg) {
              auto const cl
                  = closure(fg.gens, std::max(bound, max_coordinate(fg.gens)));
              std::optional<Element> plus, minus;
              for (auto const& x : cl.elements) {
                if (is_idempotent(x) && x.k <= bound) {
                  ++c.count;
                }
                auto const h = half_membership(x);
                if (h == Half::PlusStrict && !plus) {
                  plus = x;
                } else if (h == Half::MinusStrict && !minus) {
                  minus = x;
                }
              }
              if (plus && minus
                  && prop1_idempotent_family(*plus, *minus).verified()) {
                c.verdict = CensusVerdict::Infinite;
                c.witness = std::make_pair(*plus, *minus);
                c.reason  = "elements on both sides of the diagonal generate "
                           "infinitely many idempotents";
              } else if (cl.saturated) {
                c.verdict = CensusVerdict::Finite;
                c.reason  = "closure saturated: the subsemigroup is finite";
              } else {
                c.verdict = CensusVerdict::BoundedEvidence;
                c.reason  = "no element on one side of the diagonal within "
                           "the bound";
              }
            },
            [&](auto const&) {
              c.count   = bound + 1;
              c.verdict = CensusVerdict::Infinite;
              c.reason  = "contains every idempotent b^s a^s";
              if (std::holds_alternative<family::Full>(desc)) {
                c.witness = std::make_pair(Element{0, 1}, Element{1, 0});
              }
            }},
        desc);
    return c;
  }

  Thm1Neighborhood
  thm1_neighborhood(SetDescriptor const& desc, Element x, index_t bound) {
    validate(desc);
    auto const in_s = member_predicate(desc, checked_mul(bound, 2));
    if (!in_s(x)) {
      throw PreconditionError("thm1-nbhd: " + to_string(x)
                              + " is not in " + to_string(desc));
    }
    Thm1Neighborhood out;
    for (index_t c = std::max(x.k, x.l) + 1; c <= bound; ++c) {
      if (in_s({c, c})) {
        out.i0 = c;
        break;
      }
    }
    if (out.i0 == 0) {
      throw PreconditionError(
          "thm1-nbhd: no idempotent b^s a^s in " + to_string(desc)
          + " with max(k, l) < s <= " + std::to_string(bound));
    }
    Element const e{out.i0, out.i0};
    auto const    window = enumerate(desc, bound);

    // z is in S e iff z e = z, and in e S iff e z = z, since e is idempotent.
    std::vector<Element> expected;
    out.retractions_ok = true;
    for (auto const& z : window) {
      Element const ze = z * e;
      Element const ez = e * z;
      if (ze != z && ez != z) {
        out.a_set.push_back(z);
      }
      if (z.k < out.i0 && z.l < out.i0) {
        expected.push_back(z);
      }
      out.retractions_ok = out.retractions_ok && in_s(ze) && in_s(ez)
                           && ze * e == ze && e * ez == ez;
    }
    out.characterization_ok = out.a_set == expected;
    out.contains_point
        = std::find(out.a_set.begin(), out.a_set.end(), x) != out.a_set.end();
    return out;
  }

  Element window_iso(index_t m, index_t n, Element x) {
    auto const w = make_window(m, n);
    if (!closed_form_member(w, x)) {
      throw PreconditionError("window-iso: " + to_string(x) + " is not in "
                              + to_string(w));
    }
    return {x.k - m, x.l - m};
  }

  std::string to_string(SetDescriptor const& desc) {
    return std::visit(
        overloaded{
            [](family::Full const&) -> std::string { return "full"; },
            [](family::CPlus const&) -> std::string { return "cplus"; },
            [](family::CMinus const&) -> std::string { return "cminus"; },
            [](family::CPlusRow const& r) {
              return "cplus-row:" + std::to_string(r.n);
            },
            [](family::CPlusWindow const& w) {
              return "cplus-window:" + std::to_string(w.m) + ":"
                     + std::to_string(w.n);
            },
            [](family::IdempotentChain const&) -> std::string {
              return "idem";
            },
            [](family::FinitelyGenerated const& fg) {
              std::string s = "gen:";
              for (std::size_t i = 0; i < fg.gens.size(); ++i) {
                s += (i ? "," : "") + to_string(fg.gens[i]);
              }
              return s;
            }},
        desc);
  }

  SetDescriptor parse_descriptor(std::string_view input, index_t cap) {
    text::Cursor cur(input);
    SetDescriptor out;
    if (cur.accept("full")) {
      out = family::Full{};
    } else if (cur.accept("cplus-row:")) {
      out = family::CPlusRow{cur.uint(cap)};
    } else if (cur.accept("cplus-window:")) {
      index_t const m = cur.uint(cap);
      cur.expect(':');
      index_t const n = cur.uint(cap);
      out             = family::CPlusWindow{m, n};
    } else if (cur.accept("cplus")) {
      out = family::CPlus{};
    } else if (cur.accept("cminus")) {
      out = family::CMinus{};
    } else if (cur.accept("idem")) {
      out = family::IdempotentChain{};
    } else if (cur.accept("gen:")) {
      family::FinitelyGenerated fg;
      std::string_view          rest = cur.rest();
      while (true) {
        auto const comma = rest.find(',');
        fg.gens.push_back(parse_element(rest.substr(0, comma), cap));
        if (comma == std::string_view::npos) {
          break;
        }
        rest.remove_prefix(comma + 1);
      }
      out = std::move(fg);
      validate(out);
      return out;
    } else {
      cur.fail("unknown descriptor (expected full, cplus, cminus, "
               "cplus-row:<n>, cplus-window:<m>:<n>, idem or gen:...)");
    }
    cur.expect_end();
    validate(out);
    return out;
  }

}  // namespace bicyclic
