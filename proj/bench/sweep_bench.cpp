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

// Serial against OpenMP sweeps over the same grids.

#include <benchmark/benchmark.h>

#include "bicyclic/verify.hpp"

namespace {

  using bicyclic::Execution;

  void BM_Prop2(benchmark::State& state, Execution exec) {
    auto const bound = static_cast<bicyclic::index_t>(state.range(0));
    for (auto _ : state) {
      auto r = bicyclic::verify_prop2(2, 0, 2, bound, 3, bicyclic::kDefaultKMax, exec);
      benchmark::DoNotOptimize(r.cells.data());
    }
  }

  void BM_CoreOracle(benchmark::State& state, Execution exec) {
    auto const bound = static_cast<bicyclic::index_t>(state.range(0));
    for (auto _ : state) {
      auto r = bicyclic::verify_core_oracle(bound, exec);
      benchmark::DoNotOptimize(r.checks);
    }
  }

  void BM_ShiftGrid(benchmark::State& state, Execution exec) {
    bicyclic::topology::PAdicPlus top{2};
    auto const side = bicyclic::ShiftSide::RightShift;
    auto const grid = bicyclic::shift_grid(top, side, state.range(0));
    for (auto _ : state) {
      auto r = bicyclic::check_shift(top, side, grid, 4, bicyclic::kDefaultKMax, exec);
      benchmark::DoNotOptimize(r.cells.data());
    }
  }

}  // namespace

BENCHMARK_CAPTURE(BM_Prop2, serial, Execution::Serial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Prop2, parallel, Execution::Parallel)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CoreOracle, serial, Execution::Serial)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CoreOracle, parallel, Execution::Parallel)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ShiftGrid, serial, Execution::Serial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ShiftGrid, parallel, Execution::Parallel)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
