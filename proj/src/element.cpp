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

#include "bicyclic/element.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>

#include "text.hpp"

namespace bicyclic {

  using detail::checked_add;
  using detail::checked_mul;

  Element multiply(Element x, Element y) {
    if (x.l < y.k) {
      return {checked_add(x.k, y.k - x.l), y.l};
    } else if (x.l == y.k) {
      return {x.k, y.l};
    }
    return {x.k, checked_add(x.l - y.k, y.l)};
  }

  Element reduce_word(std::span<Letter const> w) {
    // A stack holding a reduced prefix; a reduced word never contains PQ, so
    // it is Q...QP...P. Pushing Q onto a P cancels the pair.
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (Letter c : w) {
      if (c == Letter::Q && !stack.empty() && stack.back() == Letter::P) {
        stack.pop_back();
      } else {
        stack.push_back(c);
      }
    }
    auto const first_p = std::find(stack.begin(), stack.end(), Letter::P);
    auto const k       = static_cast<index_t>(first_p - stack.begin());
    return {k, static_cast<index_t>(stack.size()) - k};
  }

  Word to_word(Element x) {
    Word w;
    w.reserve(x.k + x.l);
    w.insert(w.end(), x.k, Letter::Q);
    w.insert(w.end(), x.l, Letter::P);
    return w;
  }

  Element power(Element x, index_t n) {
    if (n == 0) {
      throw PreconditionError("power: exponent must be positive");
    }
    if (x.k < x.l) {
      return {x.k, checked_add(x.k, checked_mul(n, x.l - x.k))};
    } else if (x.k > x.l) {
      return {checked_add(x.l, checked_mul(n, x.k - x.l)), x.l};
    }
    return x;
  }

  bool natural_leq(Element x, Element y) {
    // y (e, e) is y when e <= y.l and (y.k - y.l + e, e) otherwise.
    return x.k >= y.k && x.l >= y.l && x.k - y.k == x.l - y.l;
  }

  ElementSet solve_left(Element a, Element c) {
    ElementSet out;
    if (c.k > a.k) {
      out.insert({c.k - a.k + a.l, c.l});
    } else if (c.k == a.k) {
      out.insert({a.l, c.l});
      // X = (m, n) with m < a.l: a X = (a.k, a.l - m + n).
      index_t const lo = c.l >= a.l ? 0 : a.l - c.l;
      for (index_t m = lo; m < a.l; ++m) {
        out.insert({m, c.l - a.l + m});
      }
    }
    return out;
  }

  ElementSet solve_right(Element c, Element b) {
    ElementSet out;
    if (c.l > b.l) {
      out.insert({c.k, c.l - b.l + b.k});
    } else if (c.l == b.l) {
      out.insert({c.k, b.k});
      // X = (k, l) with l < b.k: X b = (k - l + b.k, b.l).
      index_t const lo = c.k >= b.k ? 0 : b.k - c.k;
      for (index_t l = lo; l < b.k; ++l) {
        out.insert({c.k - b.k + l, l});
      }
    }
    return out;
  }

  std::string_view to_string(Half h) noexcept {
    switch (h) {
      case Half::PlusStrict:
        return "PlusStrict";
      case Half::MinusStrict:
        return "MinusStrict";
      case Half::Diagonal:
        return "Diagonal";
    }
    return "?";
  }

  std::string to_string(Element x) {
    return "b^" + std::to_string(x.k) + "a^" + std::to_string(x.l);
  }

  std::ostream& operator<<(std::ostream& os, Element x) {
    return os << to_string(x);
  }

  Element parse_element(std::string_view text, index_t cap) {
    text::Cursor cur(text);
    cur.skip_space();
    Element x;
    if (cur.accept('1')) {
      x = Element::identity();
    } else {
      cur.expect('b');
      cur.expect('^');
      x.k = cur.uint(cap);
      cur.skip_space();
      cur.expect('a');
      cur.expect('^');
      x.l = cur.uint(cap);
    }
    cur.skip_space();
    cur.expect_end();
    return x;
  }

  Word parse_word(std::string_view text) {
    Word w;
    if (text == "1") {
      return w;
    }
    for (char c : text) {
      switch (c) {
        case 'P':
        case 'p':
        case 'a':
          w.push_back(Letter::P);
          break;
        case 'Q':
        case 'q':
        case 'b':
          w.push_back(Letter::Q);
          break;
        default:
          if (!std::isspace(static_cast<unsigned char>(c))) {
            throw ParseError(std::string("word: unexpected letter '") + c
                             + "'");
          }
      }
    }
    return w;
  }

  std::string to_string(std::span<Letter const> w) {
    if (w.empty()) {
      return "1";
    }
    std::string s;
    s.reserve(w.size());
    for (Letter c : w) {
      s.push_back(static_cast<char>(c));
    }
    return s;
  }

}  // namespace bicyclic
