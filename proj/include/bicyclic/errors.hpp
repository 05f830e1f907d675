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

#ifndef BICYCLIC_ERRORS_HPP_
#define BICYCLIC_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bicyclic {

  //! Exponent type. Every coordinate of every element is a non-negative
  //! 64-bit integer; arithmetic that would leave that range throws
  //! std::overflow_error.
  using index_t = std::uint64_t;

  //! Thrown when an argument violates an operation's precondition
  //! (carrier membership, positive power, prime modulus, ...).
  class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! Thrown by the text grammars on malformed input.
  class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! Thrown when an exact answer exists but has no finite representation
  //! in the one-parameter set algebra.
  class UnrepresentableError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
  };

  namespace detail {
    [[nodiscard]] inline index_t checked_add(index_t a, index_t b) {
      index_t r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("bicyclic: exponent overflow in addition");
      }
      return r;
    }

    [[nodiscard]] inline index_t checked_mul(index_t a, index_t b) {
      index_t r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error(
            "bicyclic: exponent overflow in multiplication");
      }
      return r;
    }

    [[nodiscard]] inline index_t checked_pow(index_t base, index_t exp) {
      index_t r = 1;
      for (index_t i = 0; i < exp; ++i) {
        r = checked_mul(r, base);
      }
      return r;
    }
  }  // namespace detail

}  // namespace bicyclic

#endif  // BICYCLIC_ERRORS_HPP_
