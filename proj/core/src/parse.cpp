// Copyright 2026 The charplane Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <string>

#include "charplane/error.hpp"
#include "charplane/poly.hpp"

namespace charplane {

namespace {

constexpr unsigned long kMaxExponent = 100000;

class Parser {
 public:
  Parser(std::string_view text, const Field& field) : text_(text), field_(field) {}

  BivarPoly run() {
    BivarPoly r = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  BivarPoly expr() {
    BivarPoly r = accept('-') ? -term() : term();
    while (true) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  BivarPoly term() {
    BivarPoly r = factor();
    while (accept('*')) r = r * factor();
    return r;
  }

  BivarPoly factor() {
    BivarPoly b = base();
    if (!accept('^')) return b;
    skip();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
    const std::string d = digits();
    if (d.empty()) fail("expected a natural exponent");
    if (d.size() > 6 || std::stoul(d) > kMaxExponent) fail("exponent too large");
    return b.pow(static_cast<unsigned>(std::stoul(d)));
  }

  BivarPoly base() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      return BivarPoly::x(field_);
    }
    if (c == 'y') {
      ++pos_;
      return BivarPoly::y(field_);
    }
    if (c == '(') {
      ++pos_;
      BivarPoly r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return BivarPoly::constant(Scalar(field_, mpz_class(digits())));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Field& field_;
  std::size_t pos_ = 0;
};

}  // namespace

BivarPoly parse_poly(std::string_view text, const Field& field) { return Parser(text, field).run(); }

}  // namespace charplane
