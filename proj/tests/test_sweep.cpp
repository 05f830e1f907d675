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

#include <numeric>
#include <stdexcept>
#include <vector>

#include "bicyclic/sweep.hpp"

namespace bicyclic {
  namespace {

    TEST(Sweep, MapKeepsInputOrder) {
      std::vector<int> in(1000);
      std::iota(in.begin(), in.end(), 0);
      std::span<int const> cells(in);
      auto sq = [](int x) { return x * x; };
      auto a = sweep::map_serial(cells, sq);
      auto b = sweep::map_parallel(cells, sq);
      EXPECT_EQ(a, b);
      EXPECT_EQ(b[999], 998001);
    }

    TEST(Sweep, CountMatches) {
      auto odd = [](std::size_t i) { return i % 3 == 1; };
      EXPECT_EQ(sweep::count_serial(10000, odd), 3333u);
      EXPECT_EQ(sweep::count_parallel(10000, odd), 3333u);
      EXPECT_EQ(sweep::count(0, odd, Execution::Parallel), 0u);
    }

    TEST(Sweep, ParallelRethrows) {
      std::vector<int> in(64, 1);
      in[40] = 0;
      std::span<int const> cells(in);
      auto inv = [](int x) {
        if (x == 0) {
          throw std::domain_error("zero");
        }
        return 1 / x;
      };
      EXPECT_THROW((void)sweep::map_parallel(cells, inv), std::domain_error);
      EXPECT_THROW((void)sweep::map_serial(cells, inv), std::domain_error);
    }

  }  // namespace
}  // namespace bicyclic
