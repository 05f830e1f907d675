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

#include <gtest/gtest.h>

#include "bicyclic/subsemigroups.hpp"

namespace bicyclic {
  namespace {

    Element E(index_t k, index_t l) {
      return Element{k, l};
    }

    using V = std::vector<Element>;

    TEST(Contains, Examples) {
      EXPECT_TRUE(is_member(family::CPlus{}, E(2, 5)));
      EXPECT_FALSE(is_member(family::CPlus{}, E(5, 2)));
      EXPECT_TRUE(is_member(family::CPlusRow{3}, E(3, 3)));
      EXPECT_FALSE(is_member(make_window(1, 2), E(0, 4)));
      EXPECT_TRUE(is_member(family::CMinus{}, E(5, 2)));
      EXPECT_TRUE(is_member(family::IdempotentChain{}, E(7, 7)));
    }

    TEST(Contains, FinitelyGeneratedCarriesEvidence) {
      family::FinitelyGenerated g{{E(0, 2)}};
      auto in = contains(g, E(0, 6));
      EXPECT_TRUE(in.member);
      auto out = contains(g, E(0, 5));
      EXPECT_FALSE(out.member);
      EXPECT_TRUE(out.bounded_evidence);
    }

    TEST(Window, RejectsReversedBounds) {
      EXPECT_THROW((void)make_window(3, 1), PreconditionError);
    }

    TEST(Enumerate, Examples) {
      EXPECT_EQ(enumerate(family::IdempotentChain{}, 3),
                (V{E(0, 0), E(1, 1), E(2, 2), E(3, 3)}));
      EXPECT_EQ(enumerate(family::CPlusRow{1}, 3), (V{E(1, 1), E(1, 2), E(1, 3)}));
      EXPECT_EQ(enumerate(make_window(0, 1), 2),
                (V{E(0, 0), E(0, 1), E(0, 2), E(1, 1), E(1, 2)}));
      EXPECT_EQ(enumerate(family::Full{}, 4).size(), 25u);
    }

    TEST(Closure, Examples) {
      V a{E(0, 1)};
      auto c1 = closure(a, 5);
      EXPECT_EQ(c1.elements,
                (std::set<Element>{E(0, 1), E(0, 2), E(0, 3), E(0, 4), E(0, 5)}));
      EXPECT_FALSE(c1.saturated);
      V id{E(0, 0)};
      auto c2 = closure(id, 9);
      EXPECT_EQ(c2.elements, (std::set<Element>{E(0, 0)}));
      EXPECT_TRUE(c2.saturated);
      V both{E(0, 1), E(1, 0)};
      auto c3 = closure(both, 4);
      EXPECT_EQ(c3.elements.size(), 25u);
      EXPECT_FALSE(c3.saturated);
    }

    TEST(Prop1, Examples) {
      auto f = prop1_idempotent_family(E(0, 1), E(1, 0), 3);
      ASSERT_TRUE(f.verified());
      auto const& m3 = f.prefix.at(2);
      EXPECT_EQ(m3.v_power, E(3, 0));
      EXPECT_EQ(m3.u_power, E(0, 3));
      EXPECT_EQ(m3.vu, E(3, 3));
      EXPECT_EQ(m3.uv, E(0, 0));
      EXPECT_EQ(f.member(3), E(3, 3));

      auto g = prop1_idempotent_family(E(1, 3), E(2, 1), 1);
      ASSERT_TRUE(g.verified());
      EXPECT_EQ(g.prefix.at(0).u_power, E(1, 3));
      EXPECT_EQ(g.prefix.at(0).v_power, E(3, 1));
      EXPECT_EQ(g.prefix.at(0).vu, E(3, 3));
      EXPECT_EQ(g.member(1), E(3, 3));
    }

    TEST(Prop1, BaseIsLargerIndexWhenRowsDiffer) {
      // u = b^1 a^3, v = b^4 a^2: v^(2p) u^(2p) = b^(2+4p) a^(2+4p).
      auto f = prop1_idempotent_family(E(1, 3), E(4, 2), 4);
      ASSERT_TRUE(f.verified());
      EXPECT_EQ(f.base, 2u);
      EXPECT_EQ(f.kl, 4u);
      EXPECT_EQ(f.prefix.at(0).vu, E(6, 6));
    }

    TEST(Prop1, RejectsPairsOnTheWrongSide) {
      EXPECT_THROW((void)prop1_idempotent_family(E(1, 0), E(1, 0)), PreconditionError);
      EXPECT_THROW((void)prop1_idempotent_family(E(0, 1), E(1, 1)), PreconditionError);
    }

    TEST(Census, Examples) {
      auto idem = idempotent_census(family::IdempotentChain{}, 10);
      EXPECT_EQ(idem.count, 11u);
      EXPECT_EQ(idem.verdict, CensusVerdict::Infinite);

      auto gen = idempotent_census(family::FinitelyGenerated{{E(0, 1), E(1, 0)}}, 10);
      EXPECT_EQ(gen.count, 11u);
      EXPECT_EQ(gen.verdict, CensusVerdict::Infinite);
      ASSERT_TRUE(gen.witness);
      EXPECT_EQ(gen.witness->first, E(0, 1));
      EXPECT_EQ(gen.witness->second, E(1, 0));

      auto evens = idempotent_census(family::FinitelyGenerated{{E(0, 2)}}, 10);
      EXPECT_EQ(evens.count, 0u);
      EXPECT_EQ(evens.verdict, CensusVerdict::BoundedEvidence);

      auto row = idempotent_census(family::CPlusRow{2}, 10);
      EXPECT_EQ(row.count, 1u);
      EXPECT_EQ(row.verdict, CensusVerdict::Finite);
    }

    TEST(Thm1, Examples) {
      auto full = thm1_neighborhood(family::Full{}, E(1, 2), 10);
      EXPECT_EQ(full.i0, 3u);
      EXPECT_EQ(full.a_set.size(), 9u);
      EXPECT_TRUE(full.verified());

      auto chain = thm1_neighborhood(family::IdempotentChain{}, E(0, 0), 10);
      EXPECT_EQ(chain.i0, 1u);
      EXPECT_EQ(chain.a_set, (V{E(0, 0)}));

      auto id = thm1_neighborhood(family::Full{}, E(0, 0), 10);
      EXPECT_EQ(id.i0, 1u);
      EXPECT_EQ(id.a_set, (V{E(0, 0)}));

      EXPECT_THROW((void)thm1_neighborhood(family::CPlus{}, E(3, 1), 10),
                   PreconditionError);
    }

    TEST(Isomorphisms, Examples) {
      EXPECT_EQ(window_iso(1, 2, E(1, 3)), E(0, 2));
      EXPECT_EQ(window_iso(0, 4, E(3, 9)), E(3, 9));
      EXPECT_EQ(anti_iso(E(1, 3)), E(3, 1));
      EXPECT_EQ(anti_iso(E(0, 1) * E(0, 1)), E(2, 0));
      EXPECT_EQ(anti_iso(E(0, 1) * E(0, 1)), anti_iso(E(0, 1)) * anti_iso(E(0, 1)));
      EXPECT_EQ(anti_iso(E(4, 4)), E(4, 4));
    }

    TEST(WindowIso, IsAHomomorphismOnTheWindow) {
      auto xs = enumerate(make_window(2, 4), 9);
      for (auto x : xs) {
        for (auto y : xs) {
          EXPECT_EQ(window_iso(2, 4, x * y), window_iso(2, 4, x) * window_iso(2, 4, y));
        }
      }
    }

    TEST(Descriptor, RoundTrip) {
      for (auto const* text : {"full", "cplus", "cminus", "cplus-row:3",
                               "cplus-window:1:4", "idem", "gen:b^0a^1,b^2a^0"}) {
        EXPECT_EQ(to_string(parse_descriptor(text)), text);
      }
      EXPECT_THROW((void)parse_descriptor("cplus-window:4:1"), PreconditionError);
      EXPECT_THROW((void)parse_descriptor("bogus"), ParseError);
    }

  }  // namespace
}  // namespace bicyclic
