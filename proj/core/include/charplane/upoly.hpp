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

#ifndef CHARPLANE_UPOLY_HPP
#define CHARPLANE_UPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "charplane/field.hpp"

namespace charplane {

/// Dense univariate polynomial over a FieldCtx, low degree first, trimmed.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Field field) : field_(std::move(field)) {}
  UPoly(Field field, std::vector<Scalar> coeffs);

  static UPoly constant(const Scalar& c);
  /// c * t^degree.
  static UPoly monomial(const Scalar& c, unsigned degree);
  static UPoly variable(Field field) { return monomial(Scalar::one(field), 1); }

  const Field& field() const noexcept { return field_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  int order() const;
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  Scalar coeff(std::size_t i) const;
  const Scalar& lead() const { return c_.back(); }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(const Scalar& c) const;
  /// Multiply by t^n.
  UPoly shifted(unsigned n) const;

  /// Quotient and remainder; throws on division by zero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  /// Exact quotient; throws NotDivisible when the remainder is nonzero.
  UPoly exact_div(const UPoly& d) const;

  UPoly monic() const;
  UPoly derivative() const;
  Scalar eval(const Scalar& at) const;
  /// Characteristic p only: the polynomial g with g^p = *this (all exponents divisible by p).
  UPoly pth_root() const;

  friend bool operator==(const UPoly& a, const UPoly& b);
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  Field field_;
  std::vector<Scalar> c_;
};

/// Monic gcd (zero only when both inputs are zero).
UPoly gcd(UPoly a, UPoly b);
/// a^e mod m.
UPoly pow_mod(const UPoly& a, const mpz_class& e, const UPoly& m);

/// u = lead * prod f_i^{m_i} with monic, squarefree, pairwise coprime f_i.
/// Correct in characteristic p, where p-th power components are extracted.
std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& u);

/// Image of a scalar in a field containing its own; raises FieldMismatch
/// when no canonical embedding exists. Embeddings F_{p^a} -> F_{p^b} send
/// the generator to the canonically smallest root of the source modulus.
Scalar embed(const Scalar& a, const Field& target);
UPoly embed(const UPoly& u, const Field& target);
/// Smallest field in this library's tower containing both.
Field common_field(const Field& a, const Field& b);

struct Root {
  Scalar value;
  unsigned multiplicity = 0;
};

struct RootSet {
  Field field;              ///< field holding every root (possibly enlarged)
  std::vector<Root> roots;  ///< canonical order, distinct values
};

/// Every root of u in the smallest extension of u's field that contains all of
/// them. In characteristic zero only rational roots and roots of quadratic
/// factors (over Q or one fixed Q(sqrt d)) are supported; anything else is
/// NotSupported.
RootSet roots_in_splitting_field(const UPoly& u);

/// Roots of u lying in u's own field, canonical order, with multiplicities.
std::vector<Root> roots_in_field(const UPoly& u);

}  // namespace charplane

#endif  // CHARPLANE_UPOLY_HPP
