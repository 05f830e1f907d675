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

// Grid-sweep kernels. Every cell of a sweep is a pure computation, so the
// OpenMP kernels below write each result into its own slot; the output order
// is the input order whatever the schedule. The serial kernels are the
// reference the parallel ones are tested against.

#ifndef BICYCLIC_SWEEP_HPP_
#define BICYCLIC_SWEEP_HPP_

#include <cstddef>
#include <exception>
#include <span>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bicyclic {

  enum class Execution { Serial, Parallel };

  namespace sweep {

    inline int max_threads() noexcept {
#ifdef _OPENMP
      return omp_get_max_threads();
#else
      return 1;
#endif
    }

    template <class In, class Fn>
    auto map_serial(std::span<In const> cells, Fn&& fn) {
      using Out = std::invoke_result_t<Fn&, In const&>;
      std::vector<Out> out;
      out.reserve(cells.size());
      for (auto const& c : cells) {
        out.push_back(fn(c));
      }
      return out;
    }

    template <class In, class Fn>
    auto map_parallel(std::span<In const> cells, Fn&& fn) {
      using Out = std::invoke_result_t<Fn&, In const&>;
      static_assert(std::is_default_constructible_v<Out>);
      std::vector<Out>                out(cells.size());
      std::vector<std::exception_ptr> errors(cells.size());
      auto const n = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
          out[i] = fn(cells[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
      for (auto const& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }
      return out;
    }

    template <class In, class Fn>
    auto map(std::span<In const> cells, Fn&& fn, Execution exec) {
      return exec == Execution::Serial
                 ? map_serial(cells, std::forward<Fn>(fn))
                 : map_parallel(cells, std::forward<Fn>(fn));
    }

    //! Number of i in [0, n) with fails(i).
    template <class Pred>
    std::size_t count_serial(std::size_t n, Pred&& fails) {
      std::size_t bad = 0;
      for (std::size_t i = 0; i < n; ++i) {
        bad += fails(i) ? 1 : 0;
      }
      return bad;
    }

    template <class Pred>
    std::size_t count_parallel(std::size_t n, Pred&& fails) {
      std::size_t    bad = 0;
      auto const     m   = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for reduction(+ : bad) schedule(static)
      for (std::ptrdiff_t i = 0; i < m; ++i) {
        bad += fails(static_cast<std::size_t>(i)) ? 1 : 0;
      }
      return bad;
    }

    template <class Pred>
    std::size_t count(std::size_t n, Pred&& fails, Execution exec) {
      return exec == Execution::Serial
                 ? count_serial(n, std::forward<Pred>(fails))
                 : count_parallel(n, std::forward<Pred>(fails));
    }

  }  // namespace sweep
}  // namespace bicyclic

#endif  // BICYCLIC_SWEEP_HPP_
