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

#ifndef CHARPLANE_TESTS_SUPPORT_INT_POLY_HPP
#define CHARPLANE_TESTS_SUPPORT_INT_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "charplane/charplane.hpp"

namespace charplane::testing {

/// Integer-coefficient bivariate polynomial, kept independent of the library's arithmetic.
class IntPoly {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;  // (x exponent, y exponent)

  IntPoly() = default;
  static IntPoly constant(long c);
  static IntPoly monomial(long c, std::uint32_t i, std::uint32_t j);
  static IntPoly x() { return monomial(1, 1, 0); }
  static IntPoly y() { return monomial(1, 0, 1); }

  const std::map<Key, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly pow(unsigned e) const;
  IntPoly swapped() const;
  /// f(X, Y) for integer polynomials X, Y.
  IntPoly compose(const IntPoly& X, const IntPoly& Y) const;

  /// Reduction mod p (p = 0 keeps the integers).
  IntPoly reduced_mod(std::uint64_t p) const;
  /// Expression in the CLI grammar.
  std::string text() const;
  BivarPoly to_bivar(const Field& field) const { return parse_poly(text(), field); }

 private:
  std::map<Key, mpz_class> terms_;
};

}  // namespace charplane::testing

#endif  // CHARPLANE_TESTS_SUPPORT_INT_POLY_HPP
