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

// Minimal cursor over the element / set / descriptor grammars.

#ifndef BICYCLIC_SRC_TEXT_HPP_
#define BICYCLIC_SRC_TEXT_HPP_

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>

#include "bicyclic/errors.hpp"

namespace bicyclic::text {

  class Cursor {
   public:
    explicit Cursor(std::string_view s) : text_(s) {}

    [[nodiscard]] bool at_end() const noexcept {
      return pos_ >= text_.size();
    }

    [[nodiscard]] std::string_view rest() const noexcept {
      return text_.substr(pos_);
    }

    void skip_space() noexcept {
      while (!at_end()
             && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
    }

    bool accept(char c) noexcept {
      if (!at_end() && text_[pos_] == c) {
        ++pos_;
        return true;
      }
      return false;
    }

    bool accept(std::string_view token) noexcept {
      if (rest().starts_with(token)) {
        pos_ += token.size();
        return true;
      }
      return false;
    }

    void expect(char c) {
      if (!accept(c)) {
        fail(std::string("expected '") + c + "'");
      }
    }

    void expect_end() {
      if (!at_end()) {
        fail("unexpected trailing input");
      }
    }

    index_t uint(index_t cap) {
      auto const     r = rest();
      index_t        v = 0;
      auto const [ptr, ec] = std::from_chars(r.data(), r.data() + r.size(), v);
      if (ec == std::errc::result_out_of_range) {
        fail("integer out of range");
      }
      if (ec != std::errc() || ptr == r.data()) {
        fail("expected unsigned integer");
      }
      if (v > cap) {
        fail("exponent " + std::to_string(v) + " exceeds cap "
             + std::to_string(cap));
      }
      pos_ += static_cast<std::size_t>(ptr - r.data());
      return v;
    }

    [[noreturn]] void fail(std::string const& what) const {
      throw ParseError(what + " at offset " + std::to_string(pos_) + " in '"
                       + std::string(text_) + "'");
    }

   private:
    std::string_view text_;
    std::size_t      pos_ = 0;
  };

}  // namespace bicyclic::text

#endif  // BICYCLIC_SRC_TEXT_HPP_
