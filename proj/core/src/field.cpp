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

#include "charplane/field.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "charplane/error.hpp"
#include "fp_poly.hpp"

namespace charplane {

namespace {

constexpr std::uint64_t kMaxCharacteristic = (1ULL << 31) - 1;

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

bool is_squarefree(const mpz_class& d) {
  mpz_class n = abs(d);
  for (mpz_class q = 2; q * q <= n; ++q) {
    if (n % (q * q) == 0) return false;
  }
  return true;
}

std::string poly_in_t(const std::vector<std::string>& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const std::string& c = coeffs[i];
    if (c == "0") continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

FieldCtx::FieldCtx(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus, mpz_class radicand)
    : p_(p), k_(k), modulus_(std::move(modulus)), radicand_(std::move(radicand)) {}

Field FieldCtx::rationals() { return make(0, 1); }

Field FieldCtx::make(std::uint64_t p, unsigned k) {
  if (k == 0) raise(ErrorCode::UnsupportedExtension, "extension degree must be positive");
  if (p == 0 && k > 1) {
    raise(ErrorCode::UnsupportedExtension, "characteristic 0 extensions are built from quadratic roots only");
  }
  if (p != 0 && !fp::is_prime(p)) {
    raise(ErrorCode::InvalidCharacteristic, std::to_string(p) + " is neither 0 nor a prime");
  }
  if (p > kMaxCharacteristic) raise(ErrorCode::NotSupported, "characteristic exceeds 2^31-1");

  static std::map<std::pair<std::uint64_t, unsigned>, Field> registry;
  {
    std::lock_guard lock(registry_mutex());
    auto it = registry.find({p, k});
    if (it != registry.end()) return it->second;
  }
  std::vector<std::uint64_t> modulus;
  if (p != 0 && k > 1) modulus = fp::first_irreducible(p, k);
  auto field = std::make_shared<const FieldCtx>(p, k, std::move(modulus), mpz_class(0));
  std::lock_guard lock(registry_mutex());
  return registry.emplace(std::make_pair(p, k), field).first->second;
}

Field FieldCtx::quadratic(const mpz_class& d) {
  if (d == 0 || d == 1 || !is_squarefree(d)) {
    raise(ErrorCode::UnsupportedExtension, "Q(sqrt d) requires squarefree d != 0, 1");
  }
  static std::map<std::string, Field> registry;
  const std::string key = d.get_str();
  std::lock_guard lock(registry_mutex());
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto field = std::make_shared<const FieldCtx>(0, 2, std::vector<std::uint64_t>{}, d);
  return registry.emplace(key, field).first->second;
}

mpz_class FieldCtx::order() const {
  if (p_ == 0) return 0;
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p_), k_);
  return q;
}

std::string FieldCtx::name() const {
  if (p_ == 0) return k_ == 1 ? "Q" : "Q(sqrt(" + radicand_.get_str() + "))";
  if (k_ == 1) return "F_" + std::to_string(p_);
  std::vector<std::string> c;
  for (auto v : modulus_) c.push_back(std::to_string(v));
  return "F_" + std::to_string(p_) + "^" + std::to_string(k_) + "[t]/(" + poly_in_t(c) + ")";
}

bool operator==(const FieldCtx& a, const FieldCtx& b) {
  return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_ && a.radicand_ == b.radicand_;
}

bool same_field(const Field& a, const Field& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------------------

Scalar::Scalar(Field field, long value) : Scalar(std::move(field), mpz_class(value)) {}

Scalar::Scalar(Field field, const mpz_class& value) : field_(std::move(field)) {
  const unsigned k = field_->degree();
  if (field_->is_finite()) {
    const std::uint64_t p = field_->characteristic();
    mpz_class r = value % mpz_class(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    res_.assign(k, 0);
    res_[0] = r.get_ui();
  } else {
    rat_.assign(k, mpq_class(0));
    rat_[0] = mpq_class(value);
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(std::move(field)) {
  const unsigned k = field_->degree();
  if (field_->is_finite()) {
    const std::uint64_t p = field_->characteristic();
    const mpz_class pz(static_cast<unsigned long>(p));
    mpz_class num = value.get_num() % pz;
    mpz_class den = value.get_den() % pz;
    if (num < 0) num += pz;
    if (den == 0) raise(ErrorCode::DivisionByZero, "denominator vanishes in characteristic " + std::to_string(p));
    res_.assign(k, 0);
    res_[0] = fp::mul_mod(num.get_ui(), fp::inv_mod(den.get_ui(), p), p);
  } else {
    rat_.assign(k, mpq_class(0));
    rat_[0] = value;
    rat_[0].canonicalize();
  }
}

Scalar Scalar::generator(Field field) {
  if (field->degree() < 2) raise(ErrorCode::NotSupported, "prime field has no extension generator");
  Scalar s = zero(field);
  if (field->is_finite()) {
    s.res_[1] = 1;
  } else {
    s.rat_[1] = 1;
  }
  return s;
}

Scalar Scalar::from_index(Field field, const mpz_class& index) {
  if (!field->is_finite()) return Scalar(std::move(field), index);
  Scalar s = zero(field);
  const std::uint64_t p = field->characteristic();
  mpz_class rem = index;
  if (rem < 0) raise(ErrorCode::NotSupported, "negative element index");
  for (unsigned i = 0; i < field->degree() && rem > 0; ++i) {
    mpz_class digit = rem % static_cast<unsigned long>(p);
    s.res_[i] = digit.get_ui();
    rem /= static_cast<unsigned long>(p);
  }
  return s;
}

Scalar Scalar::from_residues(Field field, Residues coords) {
  Scalar s = zero(field);
  const std::uint64_t p = field->characteristic();
  if (!field->is_finite() || coords.size() > field->degree()) {
    raise(ErrorCode::FieldMismatch, "residue vector does not fit " + field->name());
  }
  for (std::size_t i = 0; i < coords.size(); ++i) s.res_[i] = coords[i] % p;
  return s;
}

Scalar Scalar::from_rationals(Field field, Rationals coords) {
  Scalar s = zero(field);
  if (field->is_finite() || coords.size() > field->degree()) {
    raise(ErrorCode::FieldMismatch, "rational vector does not fit " + field->name());
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    s.rat_[i] = coords[i];
    s.rat_[i].canonicalize();
  }
  return s;
}

bool Scalar::is_zero() const {
  for (auto v : res_) {
    if (v != 0) return false;
  }
  for (const auto& q : rat_) {
    if (q != 0) return false;
  }
  return true;
}

bool Scalar::is_one() const {
  if (field_->is_finite()) {
    for (std::size_t i = 0; i < res_.size(); ++i) {
      if (res_[i] != (i == 0 ? 1U : 0U)) return false;
    }
    return true;
  }
  for (std::size_t i = 0; i < rat_.size(); ++i) {
    if (rat_[i] != (i == 0 ? 1 : 0)) return false;
  }
  return true;
}

bool Scalar::in_prime_field() const {
  for (std::size_t i = 1; i < res_.size(); ++i) {
    if (res_[i] != 0) return false;
  }
  for (std::size_t i = 1; i < rat_.size(); ++i) {
    if (rat_[i] != 0) return false;
  }
  return true;
}

void Scalar::check_same(const Scalar& o) const {
  if (!field_ || !o.field_) raise(ErrorCode::FieldMismatch, "uninitialised scalar");
  if (!same_field(field_, o.field_)) {
    raise(ErrorCode::FieldMismatch, field_->name() + " vs " + o.field_->name());
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_->is_finite()) {
    const std::uint64_t p = field_->characteristic();
    for (auto& v : r.res_) v = v == 0 ? 0 : p - v;
  } else {
    for (auto& q : r.rat_) q = -q;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_->is_finite()) {
    const std::uint64_t p = field_->characteristic();
    for (std::size_t i = 0; i < res_.size(); ++i) res_[i] = fp::add_mod(res_[i], o.res_[i], p);
  } else {
    for (std::size_t i = 0; i < rat_.size(); ++i) rat_[i] += o.rat_[i];
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_->is_finite()) {
    const std::uint64_t p = field_->characteristic();
    for (std::size_t i = 0; i < res_.size(); ++i) res_[i] = fp::sub_mod(res_[i], o.res_[i], p);
  } else {
    for (std::size_t i = 0; i < rat_.size(); ++i) rat_[i] -= o.rat_[i];
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  const unsigned k = field_->degree();
  if (field_->is_finite()) {
    const std::uint64_t p = field_->characteristic();
    if (k == 1) {
      res_[0] = fp::mul_mod(res_[0], o.res_[0], p);
      return *this;
    }
    fp::Poly a(res_.begin(), res_.end()), b(o.res_.begin(), o.res_.end());
    fp::trim(a);
    fp::trim(b);
    fp::Poly c = fp::mod(fp::mul(a, b, p), field_->modulus(), p);
    res_.assign(k, 0);
    for (std::size_t i = 0; i < c.size(); ++i) res_[i] = c[i];
    return *this;
  }
  if (k == 1) {
    rat_[0] *= o.rat_[0];
    return *this;
  }
  const mpq_class d(field_->radicand());
  mpq_class a0 = rat_[0] * o.rat_[0] + d * rat_[1] * o.rat_[1];
  mpq_class a1 = rat_[0] * o.rat_[1] + rat_[1] * o.rat_[0];
  rat_[0] = a0;
  rat_[1] = a1;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero");
  Scalar r = *this;
  const unsigned k = field_->degree();
  if (field_->is_finite()) {
    const std::uint64_t p = field_->characteristic();
    if (k == 1) {
      r.res_[0] = fp::inv_mod(res_[0], p);
      return r;
    }
    fp::Poly a(res_.begin(), res_.end());
    fp::trim(a);
    fp::Poly c = fp::inverse_mod(a, field_->modulus(), p);
    r.res_.assign(k, 0);
    for (std::size_t i = 0; i < c.size(); ++i) r.res_[i] = c[i];
    return r;
  }
  if (k == 1) {
    r.rat_[0] = 1 / rat_[0];
    return r;
  }
  const mpq_class d(field_->radicand());
  mpq_class norm = rat_[0] * rat_[0] - d * rat_[1] * rat_[1];
  r.rat_[0] = rat_[0] / norm;
  r.rat_[1] = -rat_[1] / norm;
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(mpz_class(-e));
  Scalar result = one(field_);
  Scalar base = *this;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= base;
  }
  return result;
}

Scalar Scalar::pth_root() const {
  if (!field_->is_finite()) raise(ErrorCode::NotSupported, "p-th root in characteristic zero");
  if (field_->degree() == 1) return *this;
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(field_->characteristic()), field_->degree() - 1);
  return pow(e);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!same_field(a.field_, b.field_)) return false;
  return a.res_ == b.res_ && a.rat_ == b.rat_;
}

std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (a.field_->is_finite()) {
    for (std::size_t i = a.res_.size(); i-- > 0;) {
      if (a.res_[i] != b.res_[i]) return a.res_[i] <=> b.res_[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = a.rat_.size(); i-- > 0;) {
    int c = cmp(a.rat_[i], b.rat_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (!field_) return "<invalid>";
  std::vector<std::string> c;
  if (field_->is_finite()) {
    for (auto v : res_) c.push_back(std::to_string(v));
  } else {
    for (const auto& q : rat_) c.push_back(q.get_str());
  }
  if (c.size() == 1) return c[0];
  return poly_in_t(c);
}

}  // namespace charplane
