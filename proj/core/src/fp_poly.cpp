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

#include "fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "charplane/error.hpp"

namespace charplane::fp {

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) raise(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = add_mod(r[i], b[i], p);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub_mod(r[i], b[i], p);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
    }
  }
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, std::uint64_t p, Poly& q, Poly& r) {
  if (b.empty()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
  r = a;
  trim(r);
  q.clear();
  const int db = degree(b);
  if (degree(r) < db) return;
  q.assign(r.size() - b.size() + 1, 0);
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  for (int i = degree(r); i >= db; --i) {
    const std::uint64_t c = mul_mod(r[i], lead_inv, p);
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) {
      r[i - db + j] = sub_mod(r[i - db + j], mul_mod(c, b[j], p), p);
    }
  }
  trim(q);
  trim(r);
}

Poly mod(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly q, r;
  divmod(a, b, p, q, r);
  return r;
}

Poly monic(const Poly& a, std::uint64_t p) {
  if (a.empty()) return a;
  const std::uint64_t inv = inv_mod(a.back(), p);
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul_mod(a[i], inv, p);
  return r;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly pow_mod(const Poly& a, const mpz_class& e, const Poly& m, std::uint64_t p) {
  Poly result{1 % p};
  trim(result);
  Poly base = mod(a, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mul(result, base, p), m, p);
  }
  if (e == 0) result = mod(Poly{1}, m, p);
  return result;
}

Poly inverse_mod(const Poly& a, const Poly& m, std::uint64_t p) {
  // Extended Euclid tracking only the coefficient of a.
  Poly r0 = m, r1 = mod(a, m, p);
  Poly s0{}, s1{1};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, p, q, r);
    Poly s = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (degree(r0) != 0) raise(ErrorCode::DivisionByZero, "element is not invertible modulo the modulus");
  const std::uint64_t c = inv_mod(r0[0], p);
  Poly out = s0;
  for (auto& v : out) v = mul_mod(v, c, p);
  trim(out);
  return mod(out, m, p);
}

namespace {

std::vector<std::uint64_t> prime_divisors(unsigned k) {
  std::vector<std::uint64_t> out;
  for (unsigned d = 2; d * d <= k; ++d) {
    if (k % d == 0) {
      out.push_back(d);
      while (k % d == 0) k /= d;
    }
  }
  if (k > 1) out.push_back(k);
  return out;
}

// t^(p^j) mod f computed by j successive p-th powers.
Poly frobenius_iterate(const Poly& f, std::uint64_t p, unsigned j) {
  Poly x{0, 1};
  x = mod(x, f, p);
  const mpz_class pe(static_cast<unsigned long>(p));
  for (unsigned i = 0; i < j; ++i) x = pow_mod(x, pe, f, p);
  return x;
}

}  // namespace

bool is_irreducible(const Poly& f_in, std::uint64_t p) {
  Poly f = f_in;
  trim(f);
  const int k = degree(f);
  if (k <= 0) return false;
  if (k == 1) return true;
  f = monic(f, p);
  const Poly t{0, 1};
  if (frobenius_iterate(f, p, static_cast<unsigned>(k)) != mod(t, f, p)) return false;
  for (std::uint64_t q : prime_divisors(static_cast<unsigned>(k))) {
    Poly h = sub(frobenius_iterate(f, p, static_cast<unsigned>(k / q)), t, p);
    if (degree(gcd(f, h, p)) != 0) return false;
  }
  return true;
}

Poly first_irreducible(std::uint64_t p, unsigned k) {
  if (k == 0) raise(ErrorCode::UnsupportedExtension, "extension degree must be positive");
  Poly f(k + 1, 0);
  f[k] = 1;
  if (k == 1) return f;  // t
  while (true) {
    if (f[0] != 0 && is_irreducible(f, p)) return f;
    // Increment (c_0, ..., c_{k-1}) as a base-p counter, c_0 least significant.
    unsigned i = 0;
    while (i < k) {
      if (++f[i] < p) break;
      f[i] = 0;
      ++i;
    }
    if (i == k) raise(ErrorCode::Internal, "no irreducible polynomial found");
  }
}

}  // namespace charplane::fp
