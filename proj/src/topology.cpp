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

#include "bicyclic/topology.hpp"

#include "text.hpp"

namespace bicyclic {

  namespace {
    template <class... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };

    void check_prime(index_t p) {
      if (!is_prime(p)) {
        throw PreconditionError("topology: p = " + std::to_string(p)
                                + " is not prime");
      }
    }
  }  // namespace

  bool is_prime(index_t p) noexcept {
    if (p < 2) {
      return false;
    }
    for (index_t d = 2; d <= p / d; ++d) {
      if (p % d == 0) {
        return false;
      }
    }
    return true;
  }

  void validate(TopologyDescriptor const& top) {
    std::visit(overloaded{[](topology::Discrete const& d) {
                            bicyclic::validate(d.carrier);
                          },
                          [](topology::PAdicPlus const& t) { check_prime(t.p); },
                          [](topology::PAdicMinus const& t) {
                            check_prime(t.p);
                          },
                          [](topology::WindowPAdic const& t) {
                            check_prime(t.p);
                            static_cast<void>(make_window(t.m, t.n));
                          }},
               top);
  }

  SetDescriptor carrier(TopologyDescriptor const& top) {
    return std::visit(
        overloaded{
            [](topology::Discrete const& d) { return d.carrier; },
            [](topology::PAdicPlus const&) -> SetDescriptor {
              return family::CPlus{};
            },
            [](topology::PAdicMinus const&) -> SetDescriptor {
              return family::CMinus{};
            },
            [](topology::WindowPAdic const& t) -> SetDescriptor {
              return family::CPlusWindow{t.m, t.n};
            }},
        top);
  }

  bool in_carrier(TopologyDescriptor const& top, Element x) {
    return is_member(carrier(top), x);
  }

  bool is_isolated(TopologyDescriptor const& top, Element x) {
    return std::visit(
        overloaded{[](topology::Discrete const&) { return true; },
                   [](topology::PAdicPlus const&) { return false; },
                   [](topology::PAdicMinus const&) { return false; },
                   [&](topology::WindowPAdic const& t) { return x.l <= t.n; }},
        top);
  }

  SymSet basic_nbhd(TopologyDescriptor const& top, Element x, index_t idx) {
    validate(top);
    if (idx == 0) {
      throw PreconditionError("nbhd: base index starts at 1");
    }
    if (!in_carrier(top, x)) {
      throw PreconditionError("nbhd: " + to_string(x) + " is not in "
                              + to_string(carrier(top)));
    }
    return std::visit(
        overloaded{
            [&](topology::Discrete const&) { return SymSet{Single{x}}; },
            [&](topology::PAdicPlus const& t) {
              return SymSet{
                  RowTail{x.k, x.l, detail::checked_pow(t.p, idx)}};
            },
            [&](topology::PAdicMinus const& t) {
              return SymSet{
                  ColTail{x.l, x.k, detail::checked_pow(t.p, idx)}};
            },
            [&](topology::WindowPAdic const& t) {
              if (x.l <= t.n) {
                return SymSet{Single{x}};
              }
              return SymSet{
                  RowTail{x.k, x.l, detail::checked_pow(t.p, idx)}};
            }},
        top);
  }

  std::vector<Element> carrier_points(TopologyDescriptor const& top,
                                      index_t                   bound) {
    return enumerate(carrier(top), bound);
  }

  std::string to_string(TopologyDescriptor const& top) {
    return std::visit(
        overloaded{[](topology::Discrete const& d) {
                     return "discrete:" + to_string(d.carrier);
                   },
                   [](topology::PAdicPlus const& t) {
                     return "padic+:" + std::to_string(t.p);
                   },
                   [](topology::PAdicMinus const& t) {
                     return "padic-:" + std::to_string(t.p);
                   },
                   [](topology::WindowPAdic const& t) {
                     return "window:" + std::to_string(t.p) + ":"
                            + std::to_string(t.m) + ":" + std::to_string(t.n);
                   }},
        top);
  }

  TopologyDescriptor parse_topology(std::string_view input, index_t cap) {
    text::Cursor       cur(input);
    TopologyDescriptor out;
    if (cur.accept("discrete:")) {
      out = topology::Discrete{parse_descriptor(cur.rest(), cap)};
      validate(out);
      return out;
    } else if (cur.accept("padic+:")) {
      out = topology::PAdicPlus{cur.uint(cap)};
    } else if (cur.accept("padic-:")) {
      out = topology::PAdicMinus{cur.uint(cap)};
    } else if (cur.accept("window:")) {
      topology::WindowPAdic w;
      w.p = cur.uint(cap);
      cur.expect(':');
      w.m = cur.uint(cap);
      cur.expect(':');
      w.n = cur.uint(cap);
      out = w;
    } else {
      cur.fail("unknown topology (expected discrete:<carrier>, padic+:<p>, "
               "padic-:<p> or window:<p>:<m>:<n>)");
    }
    cur.expect_end();
    validate(out);
    return out;
  }

}  // namespace bicyclic
