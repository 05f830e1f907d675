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

#include "bicyclic/symset.hpp"
#include "oracles.hpp"

namespace bicyclic {
  namespace {

    Element E(index_t k, index_t l) {
      return Element{k, l};
    }

    SymSet canon(SymSet s) {
      return canonicalize(std::move(s));
    }

    TEST(Member, Examples) {
      EXPECT_TRUE(member(SymSet{RowTail{0, 3, 2}}, E(0, 7)));
      EXPECT_FALSE(member(SymSet{RowTail{0, 3, 2}}, E(1, 7)));
      EXPECT_FALSE(member(SymSet{RowTail{0, 3, 2}}, E(0, 1)));
      EXPECT_TRUE(member(SymSet{Single{E(2, 5)}}, E(2, 5)));
      EXPECT_TRUE(member(SymSet{ColTail{4, 1, 3}}, E(7, 4)));
      EXPECT_THROW((SymSet{RowTail{0, 0, 0}}), PreconditionError);
    }

    TEST(Subset, Examples) {
      auto yes = subset(SymSet{RowTail{0, 5, 4}}, SymSet{RowTail{0, 1, 2}});
      EXPECT_TRUE(yes.holds);
      SymSet a{RowTail{2, 1, 3}, Single{E(0, 0)}};
      EXPECT_TRUE(subset(a, a).holds);
      auto no = subset(SymSet{RowTail{1, 0, 2}}, SymSet{RowTail{0, 0, 1}});
      EXPECT_FALSE(no.holds);
      ASSERT_TRUE(no.counterexample);
      EXPECT_EQ(*no.counterexample, E(1, 0));
    }

    TEST(Subset, CoverByTwoProgressions) {
      // Odd and even exponents together cover the whole row.
      SymSet halves{RowTail{0, 0, 2}, RowTail{0, 1, 2}};
      EXPECT_TRUE(subset(SymSet{RowTail{0, 0, 1}}, halves).holds);
      SymSet gap{RowTail{0, 0, 2}, RowTail{0, 3, 2}};
      auto cert = subset(SymSet{RowTail{0, 0, 1}}, gap);
      EXPECT_FALSE(cert.holds);
      EXPECT_EQ(*cert.counterexample, E(0, 1));
    }

    TEST(Subset, TailNeverInsideFiniteSet) {
      SymSet fin{Single{E(0, 0)}, Single{E(0, 1)}, Single{E(0, 2)}};
      EXPECT_FALSE(subset(SymSet{RowTail{0, 0, 1}}, fin).holds);
    }

    TEST(Subset, MatchesBruteForceOnWindow) {
      std::mt19937_64 rng(7);
      for (int trial = 0; trial < 400; ++trial) {
        SymSet a{oracle::random_atom(rng, 4)};
        SymSet b{oracle::random_atom(rng, 4), oracle::random_atom(rng, 4),
                 oracle::random_atom(rng, 4)};
        auto cert = subset(a, b);
        bool brute = true;
        for (auto x : oracle::sample(a, 200)) {
          brute = brute && oracle::in_set(b, x);
        }
        EXPECT_EQ(cert.holds, brute) << to_string(a) << " in " << to_string(b);
        if (!cert.holds) {
          EXPECT_TRUE(oracle::in_set(a, *cert.counterexample));
          EXPECT_FALSE(oracle::in_set(b, *cert.counterexample));
        }
      }
    }

    TEST(LeftImage, Examples) {
      EXPECT_EQ(canon(left_image(E(1, 2), SymSet{RowTail{3, 4, 2}})),
                canon(SymSet{RowTail{2, 4, 2}}));
      SymSet s{RowTail{3, 4, 2}, Single{E(1, 1)}};
      EXPECT_EQ(canon(left_image(E(0, 0), s)), canon(s));
      EXPECT_EQ(canon(left_image(E(0, 3), SymSet{RowTail{3, 4, 2}})),
                canon(SymSet{RowTail{0, 4, 2}}));
    }

    TEST(RightImage, Examples) {
      EXPECT_EQ(canon(right_image(SymSet{RowTail{0, 0, 2}}, E(1, 1))),
                canon(SymSet{Single{E(1, 1)}, RowTail{0, 2, 2}}));
      SymSet s{ColTail{2, 0, 3}};
      EXPECT_EQ(canon(right_image(s, E(0, 0))), canon(s));
      EXPECT_EQ(canon(right_image(SymSet{RowTail{0, 5, 3}}, E(2, 7))),
                canon(SymSet{RowTail{0, 10, 3}}));
    }

    TEST(Product, Examples) {
      EXPECT_EQ(canon(product(SymSet{RowTail{0, 3, 2}}, SymSet{RowTail{1, 3, 2}})),
                canon(SymSet{RowTail{0, 5, 2}}));
      EXPECT_EQ(canon(product(SymSet{Single{E(2, 3)}}, SymSet{Single{E(5, 1)}})),
                canon(SymSet{Single{E(4, 1)}}));
      EXPECT_EQ(canon(product(SymSet{RowTail{0, 0, 2}}, SymSet{Single{E(1, 1)}})),
                canon(SymSet{Single{E(1, 1)}, RowTail{0, 2, 2}}));
    }

    TEST(Product, UnequalStepsFlattenThroughNumericalSemigroup) {
      auto got = canon(product(SymSet{RowTail{0, 0, 2}}, SymSet{RowTail{0, 0, 3}}));
      EXPECT_EQ(got, canon(SymSet{Single{E(0, 0)}, RowTail{0, 2, 1}}));
      EXPECT_EQ(to_string(got), "{b^0 a^0} ∪ {b^0 a^(2+1t)}");
    }

    TEST(Product, ColumnThenRowIsUnrepresentable) {
      EXPECT_THROW((void)product(SymSet{ColTail{0, 0, 1}}, SymSet{RowTail{0, 0, 1}}),
                   UnrepresentableError);
    }

    TEST(NumericalSemigroup, FrobenusData) {
      auto ns = numerical_semigroup(4, 6);
      EXPECT_EQ(ns.gcd, 2u);
      EXPECT_EQ(ns.conductor, 2u);  // <2, 3> = {0, 2, 3, ...}
      EXPECT_EQ(ns.exceptional, (std::vector<index_t>{0}));
      auto eight_nine = numerical_semigroup(8, 9);
      EXPECT_EQ(eight_nine.gcd, 1u);
      EXPECT_EQ(eight_nine.conductor, 56u);
    }

    TEST(Canonicalize, Examples) {
      EXPECT_EQ(canon(SymSet{Single{E(0, 4)}, RowTail{0, 0, 2}}),
                (SymSet{RowTail{0, 0, 2}}));
      EXPECT_EQ(canon(SymSet{RowTail{0, 0, 4}, RowTail{0, 0, 2}}),
                (SymSet{RowTail{0, 0, 2}}));
      EXPECT_EQ(canon(SymSet{}), SymSet{});
      EXPECT_EQ(canon(SymSet{Single{E(0, 1)}, RowTail{0, 3, 2}}),
                (SymSet{RowTail{0, 1, 2}}));
    }

    TEST(Canonicalize, IdempotentAndSound) {
      std::mt19937_64 rng(11);
      for (int trial = 0; trial < 300; ++trial) {
        SymSet s{oracle::random_atom(rng, 5), oracle::random_atom(rng, 5),
                 oracle::random_atom(rng, 5), oracle::random_atom(rng, 5)};
        auto c = canon(s);
        EXPECT_EQ(canon(c), c);
        for (index_t k = 0; k <= 40; ++k) {
          for (index_t l = 0; l <= 40; ++l) {
            ASSERT_EQ(oracle::in_set(s, E(k, l)), oracle::in_set(c, E(k, l)))
                << to_string(s) << " vs " << to_string(c);
          }
        }
      }
    }

    TEST(Invert, SwapsRowsAndColumns) {
      SymSet s{RowTail{1, 2, 3}, Single{E(4, 0)}};
      auto inv = invert(s);
      for (auto x : oracle::sample(s, 10)) {
        EXPECT_TRUE(member(inv, invert(x)));
      }
      EXPECT_EQ(canon(invert(inv)), canon(s));
    }

    TEST(Disjoint, Progressions) {
      EXPECT_TRUE(disjoint(SymSet{RowTail{0, 0, 2}}, SymSet{RowTail{0, 1, 2}}));
      EXPECT_FALSE(disjoint(SymSet{RowTail{0, 0, 2}}, SymSet{RowTail{0, 3, 3}}));
      EXPECT_TRUE(disjoint(SymSet{RowTail{0, 0, 1}}, SymSet{RowTail{1, 0, 1}}));
      EXPECT_FALSE(disjoint(SymSet{RowTail{2, 0, 1}}, SymSet{ColTail{5, 0, 1}}));
    }

    TEST(PointwiseSoundness, RandomImagesAndProducts) {
      std::mt19937_64 rng(2026);
      for (int trial = 0; trial < 200; ++trial) {
        auto a = oracle::random_atom(rng);
        auto b = oracle::random_atom(rng);
        Element s{rng() % 9, rng() % 9};
        SymSet A{a};
        SymSet B{b};
        auto li = oracle::check_left_image(s, A, left_image(s, A));
        EXPECT_FALSE(li) << to_string(A) << ": " << *li;
        auto ri = oracle::check_right_image(A, s, right_image(A, s));
        EXPECT_FALSE(ri) << to_string(A) << ": " << *ri;
        if (std::holds_alternative<ColTail>(a) && std::holds_alternative<RowTail>(b)) {
          continue;
        }
        auto pr = oracle::check_product(A, B, product(A, B));
        EXPECT_FALSE(pr) << to_string(A) << " * " << to_string(B) << ": " << *pr;
      }
    }

    TEST(Text, RoundTrip) {
      std::mt19937_64 rng(5);
      for (int trial = 0; trial < 200; ++trial) {
        SymSet s{oracle::random_atom(rng), oracle::random_atom(rng)};
        EXPECT_EQ(parse_symset(to_string(s)), s) << to_string(s);
      }
      EXPECT_EQ(to_string(SymSet{}), "∅");
      EXPECT_EQ(parse_symset("{}"), SymSet{});
      EXPECT_EQ(parse_symset("{b^0 a^7} | {b^(3+2t) a^1}"),
                (SymSet{Single{E(0, 7)}, ColTail{1, 3, 2}}));
      EXPECT_THROW((void)parse_symset("{b^0 a^(3+0t)}"), std::invalid_argument);
      EXPECT_THROW((void)parse_symset("{b^0 a^7"), ParseError);
    }

  }  // namespace
}  // namespace bicyclic
