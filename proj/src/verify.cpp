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

#include "bicyclic/verify.hpp"

#include <numeric>
#include <optional>

namespace bicyclic {

  namespace {

    using Failure = std::optional<std::string>;

    // Runs fn(i) for i in [0, n) and records one check per index.
    template <class Fn>
    void run_indexed(SuiteReport& r, std::size_t n, Fn&& fn, Execution exec) {
      std::vector<std::size_t> idx(n);
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      auto const out = sweep::map(std::span<std::size_t const>(idx),
                                  [&](std::size_t i) -> Failure { return fn(i); },
                                  exec);
      for (auto const& f : out) {
        r.check(!f, f.value_or(""));
      }
    }

    // Decodes i into coordinates in [0, side) (last coordinate fastest).
    template <std::size_t N>
    std::array<index_t, N> digits(std::size_t i, index_t side) {
      std::array<index_t, N> d{};
      for (std::size_t j = N; j-- > 0;) {
        d[j] = i % side;
        i /= side;
      }
      return d;
    }

    std::string show(Element x) {
      return to_string(x);
    }

    ElementSet brute_solve_left(Element a, Element c, index_t window) {
      ElementSet out;
      for (index_t k = 0; k <= window; ++k) {
        for (index_t l = 0; l <= window; ++l) {
          if (a * Element{k, l} == c) {
            out.insert({k, l});
          }
        }
      }
      return out;
    }

    ElementSet brute_solve_right(Element c, Element b, index_t window) {
      ElementSet out;
      for (index_t k = 0; k <= window; ++k) {
        for (index_t l = 0; l <= window; ++l) {
          if (Element{k, l} * b == c) {
            out.insert({k, l});
          }
        }
      }
      return out;
    }

  }  // namespace

  void SuiteReport::check(bool ok, std::string const& what) {
    ++checks;
    if (!ok) {
      ++failure_count;
      if (failures.size() < kMaxListedFailures) {
        failures.push_back(what);
      }
    }
  }

  void SuiteReport::merge(SuiteReport const& other) {
    checks += other.checks;
    failure_count += other.failure_count;
    for (auto const& f : other.failures) {
      if (failures.size() < kMaxListedFailures) {
        failures.push_back(f);
      }
    }
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }

  SuiteReport verify_core_oracle(index_t bound, Execution exec) {
    SuiteReport r{"core-oracle"};
    index_t const side = bound + 1;

    run_indexed(
        r, side * side * side * side,
        [&](std::size_t i) -> Failure {
          auto const [a, b, c, d] = digits<4>(i, side);
          Element const x{a, b}, y{c, d};
          Word          w = to_word(x);
          Word const    v = to_word(y);
          w.insert(w.end(), v.begin(), v.end());
          if (x * y != reduce_word(w)) {
            return "multiply " + show(x) + " " + show(y)
                   + " disagrees with word reduction";
          }
          Element const xi = invert(x);
          if (x * xi * x != x || xi * x * xi != xi) {
            return "inverse axioms fail at " + show(x);
          }
          if (invert(x * y) != invert(y) * invert(x)) {
            return "inversion is not anti-multiplicative at " + show(x) + ", "
                   + show(y);
          }
          bool witness = false;
          for (index_t e = 0; e <= 2 * side && !witness; ++e) {
            witness = y * Element{e, e} == x;
          }
          if (witness != natural_leq(x, y)) {
            return "natural order closed form disagrees at " + show(x)
                   + ", " + show(y);
          }
          return std::nullopt;
        },
        exec);
    r.notes.push_back("multiply / reduce_word, inverse axioms, natural order: "
                      "all pairs with coordinates <= "
                      + std::to_string(bound));

    index_t const as = std::min<index_t>(bound, 6) + 1;
    run_indexed(
        r, as * as * as * as * as * as,
        [&](std::size_t i) -> Failure {
          auto const    d = digits<6>(i, as);
          Element const x{d[0], d[1]}, y{d[2], d[3]}, z{d[4], d[5]};
          if ((x * y) * z != x * (y * z)) {
            return "associativity fails at " + show(x) + ", " + show(y)
                   + ", " + show(z);
          }
          return std::nullopt;
        },
        exec);
    r.notes.push_back("associativity: all triples with coordinates <= "
                      + std::to_string(as - 1));

    index_t const ps = std::min<index_t>(bound, 8) + 1;
    run_indexed(
        r, ps * ps * 10,
        [&](std::size_t i) -> Failure {
          Element const x{i / 10 / ps, (i / 10) % ps};
          index_t const n = i % 10 + 1;
          Element       it = x;
          for (index_t j = 1; j < n; ++j) {
            it = it * x;
          }
          if (power(x, n) != it) {
            return "power(" + show(x) + ", " + std::to_string(n)
                   + ") disagrees with iterated multiplication";
          }
          return std::nullopt;
        },
        exec);
    r.notes.push_back("power: coordinates <= " + std::to_string(ps - 1)
                      + ", n <= 10");

    index_t const window = 30;
    run_indexed(
        r, ps * ps * ps * ps,
        [&](std::size_t i) -> Failure {
          auto const [a, b, c, d] = digits<4>(i, ps);
          Element const x{a, b}, y{c, d};
          if (solve_left(x, y) != brute_solve_left(x, y, window)) {
            return "solve_left(" + show(x) + ", " + show(y)
                   + ") disagrees with enumeration";
          }
          if (solve_right(y, x) != brute_solve_right(y, x, window)) {
            return "solve_right(" + show(y) + ", " + show(x)
                   + ") disagrees with enumeration";
          }
          return std::nullopt;
        },
        exec);
    r.notes.push_back("solve_left / solve_right: coordinates <= "
                      + std::to_string(ps - 1) + ", enumeration window "
                      + std::to_string(window));
    return r;
  }

  SuiteReport verify_prop1(index_t bound, index_t max_p) {
    SuiteReport                r{"prop1"};
    std::array<std::size_t, 3> cases{};  // i < j, i = j, i > j
    for (index_t ui = 0; ui <= bound; ++ui) {
      for (index_t ul = ui + 1; ul <= bound; ++ul) {
        for (index_t vl = 0; vl <= bound; ++vl) {
          for (index_t vk = vl + 1; vk <= bound; ++vk) {
            Element const u{ui, ul}, v{vk, vl};
            auto const    f = prop1_idempotent_family(u, v, max_p);
            r.check(f.verified(), "idempotent family fails for u = " + show(u)
                                      + ", v = " + show(v));
            ++cases[f.i < f.j ? 0 : (f.i == f.j ? 1 : 2)];
          }
        }
      }
    }
    r.notes.push_back("pairs with i < j: " + std::to_string(cases[0])
                      + ", i = j: " + std::to_string(cases[1])
                      + ", i > j: " + std::to_string(cases[2]));
    return r;
  }

  SuiteReport verify_prop2_suite(index_t   p,
                                 index_t   m,
                                 index_t   n,
                                 index_t   bound,
                                 index_t   k_max,
                                 Execution exec) {
    SuiteReport r{"prop2"};
    auto const  rep = verify_prop2(p, m, n, bound, 3, k_max, exec);
    for (auto const& c : rep.cells) {
      r.check(is_continuous(c.verdict) && c.containment != Containment::Fails,
              "joint continuity fails at x = " + show(c.x) + ", y = "
                  + show(c.y) + ", t = " + std::to_string(c.t) + " ("
                  + std::string(verdict_name(c.verdict)) + ")");
    }
    static constexpr char const* kNames[]
        = {"both isolated", "left isolated", "right isolated",
           "both non-isolated"};
    for (std::size_t i = 0; i < 4; ++i) {
      auto const& s = rep.cases[i];
      r.notes.push_back(std::string("case ") + std::to_string(i + 1) + " ("
                        + kNames[i] + "): " + std::to_string(s.cells)
                        + " cells, " + std::to_string(s.continuous)
                        + " continuous, V_t(x)V_t(y) = V_t(xy) in "
                        + std::to_string(s.equal) + ", strict inclusion in "
                        + std::to_string(s.strict));
    }
    return r;
  }

  SuiteReport verify_thm1(index_t bound) {
    SuiteReport                      r{"thm1"};
    std::vector<SetDescriptor> const descs
        = {family::Full{}, family::CPlus{}, family::CMinus{},
           family::IdempotentChain{}};
    index_t const window = 2 * bound + 2;
    for (auto const& desc : descs) {
      auto const members = enumerate(desc, window);
      for (auto const& x : enumerate(desc, bound)) {
        auto const  nb = thm1_neighborhood(desc, x, window);
        std::string where
            = to_string(desc) + " at " + show(x) + " (i0 = "
              + std::to_string(nb.i0) + ")";
        r.check(nb.verified(), "neighbourhood checks fail in " + where);
        // Translate sets by direct multiplication.
        Element const     e{nb.i0, nb.i0};
        std::set<Element> translates;
        for (auto const& s : members) {
          translates.insert(s * e);
          translates.insert(e * s);
        }
        std::vector<Element> complement;
        for (auto const& z : members) {
          if (!translates.contains(z)) {
            complement.push_back(z);
          }
        }
        r.check(complement == nb.a_set,
                "A differs from the translate complement in " + where);
      }
    }
    return r;
  }

  SuiteReport verify_thm2(index_t bound) {
    SuiteReport   r{"thm2"};
    std::size_t   largest = 0;
    index_t const window  = 30;
    for (index_t x0 = 0; x0 <= bound; ++x0) {
      for (index_t y0 = 0; y0 <= bound; ++y0) {
        for (index_t j0 = 0; j0 <= bound; ++j0) {
          if (!(y0 > j0 && y0 - j0 > x0)) {
            continue;
          }
          for (index_t i0 = 0; i0 <= j0; ++i0) {
            auto const  rep = thm2_equation_replay(x0, y0, i0, j0);
            std::string where
                = "(x0, y0, i0, j0) = (" + std::to_string(x0) + ", "
                  + std::to_string(y0) + ", " + std::to_string(i0) + ", "
                  + std::to_string(j0) + ")";
            r.check(rep.ok(), "replay fails at " + where);
            r.check(rep.solutions
                        == brute_solve_left(rep.left_factor, rep.rhs, window),
                    "solution set differs from enumeration at " + where);
            largest = std::max(largest, rep.solutions.size());
          }
        }
      }
    }
    r.notes.push_back("largest solution set: " + std::to_string(largest)
                      + " elements");
    return r;
  }

  std::vector<TopologyDescriptor> sample_topologies(index_t p) {
    return {topology::Discrete{family::Full{}}, topology::PAdicPlus{p},
            topology::PAdicMinus{p}, topology::WindowPAdic{p, 0, 2},
            topology::WindowPAdic{p, 1, 3}};
  }

  SuiteReport verify_hausdorff(std::vector<index_t> const& primes,
                               index_t                     bound,
                               Execution                   exec) {
    SuiteReport r{"hausdorff"};
    std::vector<TopologyDescriptor> tops;
    for (auto p : primes) {
      for (auto const& t : sample_topologies(p)) {
        if (p != primes.front()
            && std::holds_alternative<topology::Discrete>(t)) {
          continue;
        }
        tops.push_back(t);
      }
    }
    for (auto const& top : tops) {
      std::string const name   = to_string(top);
      auto const        points = carrier_points(top, bound);
      for (auto const& x : points) {
        for (index_t idx = 1; idx <= bound; ++idx) {
          SymSet const v = basic_nbhd(top, x, idx);
          r.check(member(v, x), name + ": " + show(x) + " not in V_"
                                    + std::to_string(idx));
          if (idx < bound) {
            r.check(subset(basic_nbhd(top, x, idx + 1), v).holds,
                    name + ": chain not nested at " + show(x));
          }
          bool closed = true;
          for (auto const& a : v.atoms()) {
            for (auto const& z : first_members(a, 20)) {
              closed = closed && in_carrier(top, z);
            }
          }
          r.check(closed, name + ": V_" + std::to_string(idx) + "("
                              + show(x) + ") leaves the carrier");
        }
      }
      for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
          bool separated = false;
          for (index_t idx = 1; idx <= bound && !separated; ++idx) {
            separated = disjoint(basic_nbhd(top, points[i], idx),
                                 basic_nbhd(top, points[j], idx));
          }
          r.check(separated, name + ": " + show(points[i]) + " and "
                                 + show(points[j]) + " not separated");
        }
      }
    }
    r.notes.push_back(std::to_string(tops.size())
                      + " topologies, coordinates and base index <= "
                      + std::to_string(bound));

    TopologyDescriptor const discrete = topology::Discrete{family::Full{}};
    index_t const            grid     = std::min<index_t>(bound, 4);
    for (auto side : {ShiftSide::LeftShift, ShiftSide::RightShift}) {
      auto const rep = check_shift(discrete, side,
                                   shift_grid(discrete, side, grid), 3,
                                   kDefaultKMax, exec);
      r.check(rep.continuous() == rep.cells.size(),
              "discrete topology: a " + std::string(to_string(side))
                  + " shift is not continuous");
    }
    auto const points = carrier_points(discrete, grid);
    for (auto const& x : points) {
      for (auto const& y : points) {
        r.check(is_continuous(check_joint_at(discrete, x, y, 1)),
                "discrete topology: multiplication not continuous at "
                    + show(x) + ", " + show(y));
      }
    }
    r.notes.push_back("discrete topology: shifts and multiplication "
                      "continuous on coordinates <= "
                      + std::to_string(grid));
    return r;
  }

}  // namespace bicyclic
