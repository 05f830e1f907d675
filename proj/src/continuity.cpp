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

#include "bicyclic/continuity.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace bicyclic {

  namespace {

    __extension__ typedef __int128 wide;

    // A single tail atom read as (line, base, step).
    struct Tail {
      bool    row  = true;
      index_t line = 0;
      index_t base = 0;
      index_t step = 1;
    };

    std::optional<Tail> as_tail(Atom const& a) {
      if (auto const* r = std::get_if<RowTail>(&a)) {
        return Tail{true, r->row, r->base, r->step};
      }
      if (auto const* c = std::get_if<ColTail>(&a)) {
        return Tail{false, c->col, c->base, c->step};
      }
      return std::nullopt;
    }

    std::optional<Tail> single_tail(SymSet const& S) {
      if (S.size() != 1) {
        return std::nullopt;
      }
      return as_tail(S.atoms()[0]);
    }

    std::string line_name(bool row, index_t line) {
      return (row ? "row " : "column ") + std::to_string(line);
    }

    // Line carrying the infinite part of the image of a tail on (row, line)
    // under the shift, and the eventual offset e -> e + shift along it. Both
    // depend on s and the line only, not on the base or step of the tail.
    struct ImageLine {
      bool    row;
      index_t line;
      wide    shift;
    };

    ImageLine image_line(ShiftSide side, Element s, bool row, index_t line) {
      if (side == ShiftSide::LeftShift) {
        if (row) {
          if (s.l < line) {
            return {true, s.k + (line - s.l), 0};
          }
          return {true, s.k, static_cast<wide>(s.l) - line};
        }
        return {false, line, static_cast<wide>(s.k) - s.l};
      }
      if (row) {
        return {true, line, static_cast<wide>(s.l) - s.k};
      }
      if (line < s.k) {
        return {false, s.l, static_cast<wide>(s.k) - line};
      }
      if (line == s.k) {
        return {false, s.l, 0};
      }
      return {false, line - s.k + s.l, 0};
    }

    wide mod(wide a, wide m) {
      wide r = a % m;
      return r < 0 ? r + m : r;
    }

    void require_carrier(TopologyDescriptor const& top,
                         Element                   x,
                         char const*               what) {
      if (!in_carrier(top, x)) {
        throw PreconditionError(std::string(what) + ": " + to_string(x)
                                + " is not in the carrier "
                                + to_string(carrier(top)));
      }
    }

    template <class ImageAt>
    Verdict search(index_t                           t,
                   index_t                           k_max,
                   SymSet const&                     target,
                   std::optional<std::string> const& reason,
                   ImageAt&&                         image_at) {
      std::map<index_t, Element> counterexamples;
      for (index_t k = 1; k <= k_max; ++k) {
        auto const cert = subset(image_at(k), target);
        if (cert.holds) {
          if (reason) {
            throw std::logic_error("continuity: structural obstruction '"
                                   + *reason + "' contradicted at k = "
                                   + std::to_string(k));
          }
          return ContinuousAt{{{t, k}}};
        }
        counterexamples.emplace(k, *cert.counterexample);
      }
      if (reason) {
        return DiscontinuousAt{t, std::move(counterexamples), reason};
      }
      return RefutedUpToBound{t, k_max, std::move(counterexamples)};
    }

  }  // namespace

  std::string_view to_string(ShiftSide side) noexcept {
    return side == ShiftSide::LeftShift ? "left" : "right";
  }

  bool is_continuous(Verdict const& v) noexcept {
    return std::holds_alternative<ContinuousAt>(v);
  }

  std::string_view verdict_name(Verdict const& v) noexcept {
    switch (v.index()) {
      case 0:
        return "ContinuousAt";
      case 1:
        return "DiscontinuousAt";
      default:
        return "RefutedUpToBound";
    }
  }

  Element apply_shift(ShiftSide side, Element s, Element x) {
    return side == ShiftSide::LeftShift ? s * x : x * s;
  }

  SymSet shift_image(ShiftSide side, Element s, SymSet const& S) {
    return side == ShiftSide::LeftShift ? left_image(s, S)
                                        : right_image(S, s);
  }

  std::optional<std::string>
  structural_obstruction(TopologyDescriptor const& top,
                         ShiftSide                 side,
                         Element                   s,
                         Element                   x,
                         index_t                   t) {
    // Source chain: one tail per index on a fixed line from a fixed base.
    auto const first  = single_tail(basic_nbhd(top, x, 1));
    auto const second = single_tail(basic_nbhd(top, x, 2));
    if (!first || !second || first->row != second->row
        || first->line != second->line || first->base != second->base) {
      return std::nullopt;
    }
    Element const   shifted = apply_shift(side, s, x);
    SymSet const    target  = basic_nbhd(top, shifted, t);
    ImageLine const img     = image_line(side, s, first->row, first->line);

    std::vector<Tail> on_line;
    for (auto const& a : target.atoms()) {
      auto const tail = as_tail(a);
      if (tail && tail->row == img.row && tail->line == img.line) {
        on_line.push_back(*tail);
      }
    }
    std::string const where = line_name(img.row, img.line);
    if (on_line.empty()) {
      return "for every k the image of V_k(" + to_string(x)
             + ") contains an infinite tail in " + where + ", but V_"
             + std::to_string(t) + "(" + to_string(shifted)
             + ") meets " + where + " in finitely many points";
    }
    if (on_line.size() != 1 || target.size() != 1) {
      return std::nullopt;
    }
    // The image tail is base + shift + step_k omega for large members. It
    // can only fit into one progression of step sigma once sigma | step_k,
    // and from then on its class mod sigma no longer depends on k.
    Tail const& w     = on_line.front();
    wide const  sigma = w.step;
    wide const  have  = mod(static_cast<wide>(first->base) + img.shift, sigma);
    wide const  need  = mod(static_cast<wide>(w.base), sigma);
    if (have != need) {
      return "for every k the image of V_k(" + to_string(x)
             + ") has an infinite tail in " + where + " whose exponents are "
             + "congruent to " + std::to_string(static_cast<index_t>(have))
             + " mod " + std::to_string(w.step) + " (or spread over several "
             + "classes), but V_" + std::to_string(t) + "("
             + to_string(shifted) + ") needs class "
             + std::to_string(static_cast<index_t>(need));
    }
    return std::nullopt;
  }

  Verdict check_shift_at(TopologyDescriptor const& top,
                         ShiftSide                 side,
                         Element                   s,
                         Element                   x,
                         index_t                   t,
                         index_t                   k_max) {
    if (t == 0 || k_max == 0) {
      throw PreconditionError("check-shift: indices start at 1");
    }
    require_carrier(top, s, "check-shift");
    require_carrier(top, x, "check-shift");
    Element const shifted = apply_shift(side, s, x);
    require_carrier(top, shifted, "check-shift");
    SymSet const target = basic_nbhd(top, shifted, t);
    auto const   reason = structural_obstruction(top, side, s, x, t);
    return search(t, k_max, target, reason, [&](index_t k) {
      return shift_image(side, s, basic_nbhd(top, x, k));
    });
  }

  std::size_t ShiftReport::continuous() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](auto const& c) {
          return c.verdict.index() == 0;
        }));
  }

  std::size_t ShiftReport::discontinuous() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](auto const& c) {
          return c.verdict.index() == 1;
        }));
  }

  std::size_t ShiftReport::refuted() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](auto const& c) {
          return c.verdict.index() == 2;
        }));
  }

  std::vector<std::pair<Element, Element>>
  shift_grid(TopologyDescriptor const& top, ShiftSide side, index_t bound) {
    auto const points = carrier_points(top, bound);
    std::vector<std::pair<Element, Element>> out;
    for (auto const& s : points) {
      for (auto const& x : points) {
        if (in_carrier(top, apply_shift(side, s, x))) {
          out.emplace_back(s, x);
        }
      }
    }
    return out;
  }

  ShiftReport check_shift(TopologyDescriptor const&                    top,
                          ShiftSide                                    side,
                          std::span<std::pair<Element, Element> const> sample,
                          index_t                                      t_max,
                          index_t                                      k_max,
                          Execution                                    exec) {
    std::vector<ShiftCell> cells;
    cells.reserve(sample.size() * t_max);
    for (auto const& [s, x] : sample) {
      for (index_t t = 1; t <= t_max; ++t) {
        cells.push_back({s, x, t, ContinuousAt{}});
      }
    }
    auto verdicts = sweep::map(
        std::span<ShiftCell const>(cells),
        [&](ShiftCell const& c) {
          return check_shift_at(top, side, c.s, c.x, c.t, k_max);
        },
        exec);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      cells[i].verdict = std::move(verdicts[i]);
    }
    return ShiftReport{std::move(cells)};
  }

  Verdict check_joint_at(TopologyDescriptor const& top,
                         Element                   x,
                         Element                   y,
                         index_t                   t,
                         index_t                   k_max) {
    if (t == 0 || k_max == 0) {
      throw PreconditionError("check-joint: indices start at 1");
    }
    require_carrier(top, x, "check-joint");
    require_carrier(top, y, "check-joint");
    Element const xy = x * y;
    require_carrier(top, xy, "check-joint");
    SymSet const target = basic_nbhd(top, xy, t);
    // x V_k(y) and V_k(x) y sit inside V_k(x) V_k(y), so an obstruction for
    // either shift is one for the product.
    auto reason
        = structural_obstruction(top, ShiftSide::LeftShift, x, y, t);
    if (!reason) {
      reason = structural_obstruction(top, ShiftSide::RightShift, y, x, t);
    }
    return search(t, k_max, target, reason, [&](index_t k) {
      return product(basic_nbhd(top, x, k), basic_nbhd(top, y, k));
    });
  }

  std::string_view to_string(Containment c) noexcept {
    switch (c) {
      case Containment::Equal:
        return "equal";
      case Containment::Strict:
        return "strict";
      case Containment::Fails:
        return "fails";
    }
    return "?";
  }

  bool Prop2Report::all_continuous() const noexcept {
    return std::all_of(cells.begin(), cells.end(), [](auto const& c) {
      return is_continuous(c.verdict);
    });
  }

  Prop2Report verify_prop2(index_t   p,
                           index_t   m,
                           index_t   n,
                           index_t   bound,
                           index_t   t_max,
                           index_t   k_max,
                           Execution exec) {
    TopologyDescriptor const top = topology::WindowPAdic{p, m, n};
    validate(top);
    Prop2Report report;
    std::tie(report.p, report.m, report.n, report.bound, report.t_max)
        = std::tie(p, m, n, bound, t_max);
    auto const points = carrier_points(top, bound);
    for (auto const& x : points) {
      for (auto const& y : points) {
        for (index_t t = 1; t <= t_max; ++t) {
          JointCell c{x, y, t, ContinuousAt{}};
          c.isolation_case = is_isolated(top, x)
                                 ? (is_isolated(top, y) ? 1 : 2)
                                 : (is_isolated(top, y) ? 3 : 4);
          report.cells.push_back(std::move(c));
        }
      }
    }
    auto results = sweep::map(
        std::span<JointCell const>(report.cells),
        [&](JointCell const& c) {
          JointCell out   = c;
          out.verdict     = check_joint_at(top, c.x, c.y, c.t, k_max);
          SymSet const pr = product(basic_nbhd(top, c.x, c.t),
                                    basic_nbhd(top, c.y, c.t));
          SymSet const w  = basic_nbhd(top, c.x * c.y, c.t);
          if (!subset(pr, w).holds) {
            out.containment = Containment::Fails;
          } else {
            out.containment = subset(w, pr).holds ? Containment::Equal
                                                  : Containment::Strict;
          }
          return out;
        },
        exec);
    report.cells = std::move(results);
    for (auto const& c : report.cells) {
      auto& sum = report.cases[static_cast<std::size_t>(c.isolation_case - 1)];
      ++sum.cells;
      sum.continuous += is_continuous(c.verdict) ? 1 : 0;
      sum.equal += c.containment == Containment::Equal ? 1 : 0;
      sum.strict += c.containment == Containment::Strict ? 1 : 0;
    }
    return report;
  }

  std::optional<DiscontinuityWitness>
  find_discontinuity(TopologyDescriptor const& top,
                     ShiftSide                 side,
                     index_t                   bound,
                     index_t                   k_max,
                     Execution                 exec) {
    auto grid = shift_grid(top, side, bound);
    std::stable_sort(grid.begin(), grid.end(), [](auto const& a, auto const& b) {
      auto const size = [](auto const& c) {
        return c.first.k + c.first.l + c.second.k + c.second.l;
      };
      return std::tuple(size(a), a.first, a.second)
             < std::tuple(size(b), b.first, b.second);
    });
    auto const report = check_shift(top, side, grid, bound, k_max, exec);
    for (auto const& c : report.cells) {
      if (auto const* d = std::get_if<DiscontinuousAt>(&c.verdict)) {
        if (d->structural_reason) {
          return DiscontinuityWitness{c.s, c.x, c.t, *d};
        }
      }
    }
    return std::nullopt;
  }

  Thm2Replay
  thm2_equation_replay(index_t x0, index_t y0, index_t i0, index_t j0) {
    if (!(y0 > j0 && y0 - j0 > x0)) {
      throw PreconditionError("thm2: requires y0 - j0 > x0 >= 0");
    }
    if (i0 > j0) {
      throw PreconditionError("thm2: requires i0 <= j0");
    }
    Thm2Replay r;
    r.left_factor = {x0, detail::checked_add(y0 - j0, i0)};
    r.rhs         = {x0, y0};
    r.point       = {i0, j0};
    r.product     = r.left_factor * r.point;
    r.product_ok  = r.product == r.rhs;
    r.solutions   = solve_left(r.left_factor, r.rhs);
    r.solutions_contain_point = r.solutions.contains(r.point);

    index_t const limit = detail::checked_mul(2, j0 + 1);
    for (auto const& z : enumerate(family::CPlus{}, limit)) {
      if (z.k + z.l <= limit) {
        r.block.push_back(z);
      }
    }
    r.block_contains_point
        = std::find(r.block.begin(), r.block.end(), r.point) != r.block.end();
    Element const e{j0 + 1, j0 + 1};
    r.retract_excludes_point = e * r.point != r.point;
    return r;
  }

}  // namespace bicyclic
