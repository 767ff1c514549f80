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

#ifndef CHARPLANE_FIELD_HPP
#define CHARPLANE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace charplane {

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

/// Coefficient field of a computation: Q, a quadratic field Q(sqrt d), or
/// F_{p^k} presented as F_p[t]/(modulus).
///
/// Contexts are interned, so two handles for the same field usually share
/// one object; equality is nevertheless structural.
class FieldCtx {
 public:
  static Field rationals();
  /// F_{p^k}, or Q when p == 0 and k == 1. The modulus is the first monic
  /// irreducible polynomial of degree k in base-p counting order.
  static Field make(std::uint64_t p, unsigned k = 1);
  /// Q(sqrt d) for a squarefree integer d other than 0 and 1.
  static Field quadratic(const mpz_class& d);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  bool is_finite() const noexcept { return p_ != 0; }
  /// Monic modulus over F_p, low degree first; empty for prime fields and char 0.
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
  /// d for Q(sqrt d); zero for Q and finite fields.
  const mpz_class& radicand() const noexcept { return radicand_; }
  /// p^k for finite fields, 0 in characteristic zero.
  mpz_class order() const;
  std::string name() const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b);

  // Construction goes through the factories; the constructor is public only for make_shared.
  FieldCtx(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus, mpz_class radicand);

 private:
  std::uint64_t p_;
  unsigned k_;
  std::vector<std::uint64_t> modulus_;
  mpz_class radicand_;
};

bool same_field(const Field& a, const Field& b);

/// An exact element of a FieldCtx in canonical form: residues fully reduced
/// in characteristic p, rationals in lowest terms in characteristic zero.
/// Elements are coordinate vectors in the power basis 1, t, ..., t^{k-1}.
class Scalar {
 public:
  using Residues = boost::container::small_vector<std::uint64_t, 2>;
  using Rationals = boost::container::small_vector<mpq_class, 1>;

  Scalar() = default;
  Scalar(Field field, long value);
  Scalar(Field field, const mpz_class& value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field field) { return Scalar(std::move(field), 0L); }
  static Scalar one(Field field) { return Scalar(std::move(field), 1L); }
  /// The class of t in F_p[t]/(modulus) or sqrt(d) in Q(sqrt d).
  static Scalar generator(Field field);
  /// Deterministic enumeration: in characteristic p the base-p digits of
  /// `index` are the power-basis coordinates (index 0 = 0, 1 = 1, p = t, ...);
  /// in characteristic zero it is the integer `index`.
  static Scalar from_index(Field field, const mpz_class& index);
  static Scalar from_residues(Field field, Residues coords);
  static Scalar from_rationals(Field field, Rationals coords);

  const Field& field() const noexcept { return field_; }
  bool valid() const noexcept { return static_cast<bool>(field_); }
  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in the prime field (Q or F_p).
  bool in_prime_field() const;

  const Residues& residues() const noexcept { return res_; }
  const Rationals& rationals() const noexcept { return rat_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(const mpz_class& e) const;
  Scalar pow(std::uint64_t e) const { return pow(mpz_class(static_cast<unsigned long>(e))); }
  /// Inverse Frobenius a^{1/p}; characteristic p only.
  Scalar pth_root() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order used for deterministic sorting of roots.
  friend std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  Residues res_;
  Rationals rat_;
};

}  // namespace charplane

#endif  // CHARPLANE_FIELD_HPP
