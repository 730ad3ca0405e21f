/*
   Copyright 2026 The frobsplit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cctype>
#include <cstdint>
#include <string>

#include "frobsplit/poly.hpp"

namespace frobsplit {

namespace {

// Tokens of the polynomial grammar: integers, registry identifiers, and the
// operators + - * ^. Whitespace is insignificant.
struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool at_end() {
    skip_ws();
    return pos == text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("polynomial parse error at offset " +
                     std::to_string(pos) + ": " + msg);
  }

  char take_op() {
    char c = peek();
    ++pos;
    return c;
  }

  std::uint64_t take_uint(std::uint64_t cap) {
    skip_ws();
    if (pos == text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail("expected a number");
    }
    std::uint64_t v = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (v > cap) fail("number too large");
      ++pos;
    }
    return v;
  }

  // Like take_uint but folds modulo p as it goes, so coefficient literals
  // of any length are fine.
  std::uint64_t take_residue(std::uint32_t p) {
    skip_ws();
    if (pos == text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail("expected a number");
    }
    std::uint64_t v = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = (v * 10 + static_cast<std::uint64_t>(text[pos] - '0')) % p;
      ++pos;
    }
    return v;
  }

  std::string take_ident() {
    skip_ws();
    if (pos == text.size()) fail("expected an identifier");
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (!std::isalpha(c) && c != '_') fail("expected an identifier");
    std::size_t start = pos;
    while (pos < text.size()) {
      c = static_cast<unsigned char>(text[pos]);
      if (!std::isalnum(c) && c != '_') break;
      ++pos;
    }
    return std::string(text.substr(start, pos - start));
  }
};

constexpr std::uint64_t kMaxExponent = 1u << 30;

} // namespace

Poly PolyRing::parse(std::string_view text) const {
  Lexer lex{text};
  const RingPtr self = shared_from_this();
  Poly total = zero();

  if (lex.at_end()) lex.fail("empty polynomial");

  bool negative = false;
  if (lex.peek() == '+' || lex.peek() == '-') {
    negative = lex.take_op() == '-';
  }

  for (;;) {
    // One term: '*'-separated factors, each a literal or var[^exp].
    Poly term = one();
    for (;;) {
      char c = lex.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        term *= constant(
            static_cast<std::int64_t>(lex.take_residue(p_.value())));
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name = lex.take_ident();
        auto idx = vars_->index(name);
        if (!idx) lex.fail("unknown variable " + name);
        std::uint64_t e = 1;
        if (lex.peek() == '^') {
          lex.take_op();
          e = lex.take_uint(kMaxExponent);
        }
        Monomial m(nvars());
        m[*idx] = static_cast<std::uint32_t>(e);
        term *= this->term(Fp::one(p_), std::move(m));
      } else {
        lex.fail("expected a coefficient or variable");
      }
      if (lex.peek() == '*') {
        lex.take_op();
        continue;
      }
      break;
    }
    total = negative ? total - term : total + term;

    if (lex.at_end()) break;
    char op = lex.peek();
    if (op != '+' && op != '-') lex.fail("expected + or -");
    lex.take_op();
    negative = op == '-';
  }
  return total;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  const std::uint32_t p = ring_->prime().value();
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    const std::uint32_t c = t.coeff.value();
    const bool negative = c > p - c;
    const std::uint32_t mag = negative ? p - c : c;
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) {
        out += std::to_string(mag);
        out += "*";
      }
      bool first = true;
      for (std::size_t i = 0; i < t.mono.size(); ++i) {
        if (t.mono[i] == 0) continue;
        if (!first) out += "*";
        first = false;
        out += ring_->vars().name(i);
        if (t.mono[i] != 1) {
          out += "^";
          out += std::to_string(t.mono[i]);
        }
      }
    }
  }
  return out;
}

} // namespace frobsplit
