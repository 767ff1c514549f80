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

#ifndef CHARPLANE_POLY_HPP
#define CHARPLANE_POLY_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charplane/field.hpp"
#include "charplane/upoly.hpp"

namespace charplane {

/// Exponent pair of x^x * y^y. Ordered y-major, so the largest key is the
/// leading term for division in k[x][y].
struct Exp {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  friend bool operator==(const Exp&, const Exp&) = default;
  friend std::strong_ordering operator<=>(const Exp& a, const Exp& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

/// ord_w(x) = n, ord_w(y) = m.
struct Weight {
  std::uint64_t n = 1;
  std::uint64_t m = 1;
};

class BivarPoly {
 public:
  using Terms = std::map<Exp, Scalar>;

  BivarPoly() = default;
  explicit BivarPoly(Field field) : field_(std::move(field)) {}

  static BivarPoly constant(const Scalar& c) { return monomial(c, 0, 0); }
  static BivarPoly monomial(const Scalar& c, std::uint32_t ex, std::uint32_t ey);
  static BivarPoly x(const Field& f) { return monomial(Scalar::one(f), 1, 0); }
  static BivarPoly y(const Field& f) { return monomial(Scalar::one(f), 0, 1); }
  /// a*x + b*y + c.
  static BivarPoly linear(const Scalar& a, const Scalar& b, const Scalar& c);
  /// sum_i coeffs[i](x) * y^i.
  static BivarPoly from_y_coeffs(const Field& f, const std::vector<UPoly>& coeffs);

  const Field& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Scalar coeff(std::uint32_t ex, std::uint32_t ey) const;
  Scalar constant_term() const { return coeff(0, 0); }
  bool is_constant() const;
  /// Nonzero constant term.
  bool is_unit() const { return !constant_term().is_zero(); }

  /// Lowest total degree of a term; -1 for zero.
  int order() const;
  int total_degree() const;
  int degree_x() const;
  int degree_y() const;
  /// Largest exponent in the y-major order (zero polynomial: precondition violated).
  const std::pair<const Exp, Scalar>& leading() const { return *terms_.rbegin(); }

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  BivarPoly scaled(const Scalar& c) const;
  BivarPoly times_monomial(std::uint32_t ex, std::uint32_t ey) const;
  /// Divide by x^ex y^ey; throws NotDivisible if some term is not divisible.
  BivarPoly div_monomial(std::uint32_t ex, std::uint32_t ey) const;
  BivarPoly pow(unsigned e) const;

  BivarPoly dx() const;
  BivarPoly dy() const;
  /// Characteristic p only: g with g^p = *this.
  BivarPoly pth_root() const;
  BivarPoly swapped() const;
  /// Normalised so the leading coefficient is 1 (zero stays zero).
  BivarPoly monic() const;

  /// Coefficients as a polynomial in y over k[x]: result[i] multiplies y^i.
  std::vector<UPoly> y_coeffs() const;
  /// f(x, 0) and f(0, y) as univariate polynomials.
  UPoly at_y0() const;
  UPoly at_x0() const;

  /// f(X, Y) for polynomials X, Y over the same field.
  BivarPoly compose(const BivarPoly& X, const BivarPoly& Y) const;
  BivarPoly embed(const Field& target) const;
  /// Lowest-degree homogeneous part.
  BivarPoly initial_form() const;

  friend bool operator==(const BivarPoly& a, const BivarPoly& b);
  std::string to_string() const;

 private:
  void add_term(const Exp& e, const Scalar& c);

  Field field_;
  Terms terms_;
};

struct WeightedDecomposition {
  std::uint64_t w_order = 0;
  BivarPoly initial;
  BivarPoly tail;
};

struct ReducedResult {
  bool reduced = false;
  BivarPoly squarefree_part;
};

/// Strict grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := base ('^' natural)?; base := integer | x | y | '(' expr ')'.
BivarPoly parse_poly(std::string_view text, const Field& field);

std::uint64_t weighted_order(const BivarPoly& f, const Weight& w);
WeightedDecomposition weighted_order_and_initial(const BivarPoly& f, const Weight& w);
std::pair<BivarPoly, BivarPoly> partial_derivatives(const BivarPoly& f);
/// f_x l_y - f_y l_x.
BivarPoly polar(const BivarPoly& f, const BivarPoly& l);
/// Polynomial for l = -b x + a y.
BivarPoly line_from_direction(const Scalar& a, const Scalar& b);
/// x -> m[0][0] x + m[0][1] y, y -> m[1][0] x + m[1][1] y.
BivarPoly linear_change(const BivarPoly& f, const std::array<std::array<Scalar, 2>, 2>& m);

/// Monic greatest common divisor in k[x, y].
BivarPoly gcd(const BivarPoly& a, const BivarPoly& b);
/// Exact quotient; throws NotDivisible.
BivarPoly exact_div(const BivarPoly& a, const BivarPoly& b);
bool divides(const BivarPoly& d, const BivarPoly& a);
/// Product of the distinct irreducible factors (monic).
BivarPoly radical(const BivarPoly& f);
/// Reducedness at the origin: f / radical(f) must be a unit there.
ReducedResult reduced_test(const BivarPoly& f);

}  // namespace charplane

#endif  // CHARPLANE_POLY_HPP
