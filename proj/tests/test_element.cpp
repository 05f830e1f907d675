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

#include <limits>

#include "bicyclic/element.hpp"

namespace bicyclic {
  namespace {

    Element E(index_t k, index_t l) {
      return Element{k, l};
    }

    ElementSet brute_solve_left(Element a, Element c, index_t window) {
      ElementSet out;
      for (index_t k = 0; k <= window; ++k) {
        for (index_t l = 0; l <= window; ++l) {
          if (a * E(k, l) == c) {
            out.insert(E(k, l));
          }
        }
      }
      return out;
    }

    ElementSet brute_solve_right(Element c, Element b, index_t window) {
      ElementSet out;
      for (index_t k = 0; k <= window; ++k) {
        for (index_t l = 0; l <= window; ++l) {
          if (E(k, l) * b == c) {
            out.insert(E(k, l));
          }
        }
      }
      return out;
    }

    TEST(Multiply, Examples) {
      EXPECT_EQ(E(2, 3) * E(5, 1), E(4, 1));
      EXPECT_EQ(E(0, 0) * E(7, 2), E(7, 2));
      EXPECT_EQ(E(0, 4) * E(1, 2), E(0, 5));
    }

    TEST(Multiply, ThreeBranches) {
      EXPECT_EQ(E(1, 2) * E(3, 4), E(2, 4));  // l < m
      EXPECT_EQ(E(1, 3) * E(3, 4), E(1, 4));  // l = m
      EXPECT_EQ(E(1, 5) * E(3, 4), E(1, 6));  // l > m
    }

    TEST(Multiply, OverflowIsReported) {
      auto big = std::numeric_limits<index_t>::max();
      EXPECT_THROW((void)(E(0, big) * E(0, 1)), std::overflow_error);
    }

    TEST(ReduceWord, Examples) {
      EXPECT_EQ(reduce_word(parse_word("QQPPPQQQQQP")), E(4, 1));
      EXPECT_EQ(reduce_word(Word{}), E(0, 0));
      EXPECT_EQ(reduce_word(parse_word("PQ")), E(0, 0));
      EXPECT_EQ(reduce_word(parse_word("QP")), E(1, 1));
    }

    TEST(ReduceWord, AgreesWithNormalForm) {
      for (index_t k = 0; k <= 5; ++k) {
        for (index_t l = 0; l <= 5; ++l) {
          EXPECT_EQ(reduce_word(to_word(E(k, l))), E(k, l));
        }
      }
    }

    TEST(Invert, Examples) {
      EXPECT_EQ(invert(E(2, 3)), E(3, 2));
      EXPECT_EQ(invert(E(4, 4)), E(4, 4));
      EXPECT_EQ(invert(E(0, 0)), E(0, 0));
      auto x = E(2, 3);
      EXPECT_EQ(x * invert(x) * x, x);
      EXPECT_EQ(invert(x) * x * invert(x), invert(x));
    }

    TEST(Idempotent, Examples) {
      EXPECT_TRUE(is_idempotent(E(3, 3)));
      EXPECT_FALSE(is_idempotent(E(2, 3)));
      EXPECT_TRUE(is_idempotent(E(0, 0)));
      EXPECT_EQ(E(2, 3) * E(2, 3), E(2, 4));
    }

    TEST(Power, Examples) {
      EXPECT_EQ(power(E(1, 2), 3), E(1, 4));
      EXPECT_EQ(power(E(2, 1), 3), E(4, 1));
      EXPECT_EQ(power(E(5, 5), 17), E(5, 5));
      EXPECT_THROW((void)power(E(1, 2), 0), PreconditionError);
    }

    TEST(Power, MatchesIteratedMultiply) {
      for (index_t k = 0; k <= 5; ++k) {
        for (index_t l = 0; l <= 5; ++l) {
          Element acc = E(k, l);
          for (index_t n = 1; n <= 7; ++n) {
            EXPECT_EQ(power(E(k, l), n), acc);
            acc = acc * E(k, l);
          }
        }
      }
    }

    TEST(NaturalOrder, Examples) {
      EXPECT_TRUE(natural_leq(E(3, 4), E(1, 2)));
      EXPECT_EQ(E(1, 2) * E(4, 4), E(3, 4));
      EXPECT_TRUE(natural_leq(E(5, 2), E(5, 2)));
      EXPECT_FALSE(natural_leq(E(1, 2), E(3, 4)));
    }

    TEST(NaturalOrder, MatchesIdempotentWitness) {
      for (index_t a = 0; a <= 6; ++a) {
        for (index_t b = 0; b <= 6; ++b) {
          for (index_t c = 0; c <= 6; ++c) {
            for (index_t d = 0; d <= 6; ++d) {
              bool witness = false;
              for (index_t n = 0; n <= 20 && !witness; ++n) {
                witness = E(c, d) * E(n, n) == E(a, b);
              }
              EXPECT_EQ(natural_leq(E(a, b), E(c, d)), witness);
            }
          }
        }
      }
    }

    TEST(SolveLeft, Examples) {
      EXPECT_EQ(solve_left(E(0, 1), E(0, 1)), (ElementSet{E(0, 0), E(1, 1)}));
      EXPECT_EQ(solve_left(E(0, 0), E(3, 2)), (ElementSet{E(3, 2)}));
      // a^1 x = b^5: x = b^6 is the only solution.
      EXPECT_EQ(solve_left(E(0, 1), E(5, 0)), (ElementSet{E(6, 0)}));
      EXPECT_TRUE(solve_left(E(3, 0), E(1, 0)).empty());
    }

    TEST(SolveLeft, CanExceedTwoSolutions) {
      auto sols = solve_left(E(0, 3), E(0, 3));
      EXPECT_EQ(sols.size(), 4u);
      EXPECT_EQ(sols, brute_solve_left(E(0, 3), E(0, 3), 30));
    }

    TEST(SolveRight, Examples) {
      EXPECT_EQ(solve_right(E(1, 0), E(1, 0)), (ElementSet{E(0, 0), E(1, 1)}));
      EXPECT_EQ(solve_right(E(4, 1), E(0, 0)), (ElementSet{E(4, 1)}));
      EXPECT_EQ(solve_right(E(0, 5), E(1, 0)), (ElementSet{E(0, 6)}));
    }

    TEST(Solve, MatchesBruteForce) {
      for (index_t a = 0; a <= 5; ++a) {
        for (index_t b = 0; b <= 5; ++b) {
          for (index_t c = 0; c <= 5; ++c) {
            for (index_t d = 0; d <= 5; ++d) {
              EXPECT_EQ(solve_left(E(a, b), E(c, d)),
                        brute_solve_left(E(a, b), E(c, d), 20));
              EXPECT_EQ(solve_right(E(c, d), E(a, b)),
                        brute_solve_right(E(c, d), E(a, b), 20));
            }
          }
        }
      }
    }

    TEST(HalfMembership, Examples) {
      EXPECT_EQ(half_membership(E(0, 1)), Half::PlusStrict);
      EXPECT_EQ(half_membership(E(1, 0)), Half::MinusStrict);
      EXPECT_EQ(half_membership(E(4, 4)), Half::Diagonal);
    }

    TEST(Parse, Grammar) {
      EXPECT_EQ(parse_element("b^2a^3"), E(2, 3));
      EXPECT_EQ(parse_element("b^2 a^3"), E(2, 3));
      EXPECT_EQ(parse_element("1"), E(0, 0));
      EXPECT_THROW((void)parse_element("b^2"), ParseError);
      EXPECT_THROW((void)parse_element("b^-1a^0"), ParseError);
      EXPECT_THROW((void)parse_element("b^2a^3x"), ParseError);
      EXPECT_THROW((void)parse_element("b^2000000a^0"), ParseError);
      EXPECT_EQ(parse_element("b^2000000a^0", 3000000), E(2000000, 0));
    }

    TEST(Parse, RoundTrip) {
      for (index_t k = 0; k <= 12; ++k) {
        for (index_t l = 0; l <= 12; ++l) {
          EXPECT_EQ(parse_element(to_string(E(k, l))), E(k, l));
        }
      }
      EXPECT_EQ(to_string(E(4, 1)), "b^4a^1");
    }

  }  // namespace
}  // namespace bicyclic
