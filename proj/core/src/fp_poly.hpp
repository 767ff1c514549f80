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

// Dense univariate polynomials over a prime field F_p, coefficients stored
// low degree first and kept trimmed. Used for extension moduli and for the
// arithmetic of F_{p^k} elements.

#ifndef CHARPLANE_SRC_FP_POLY_HPP
#define CHARPLANE_SRC_FP_POLY_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace charplane::fp {

using Poly = std::vector<std::uint64_t>;
__extension__ using u128 = unsigned __int128;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

bool is_prime(std::uint64_t n);

void trim(Poly& a);
int degree(const Poly& a);
Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
/// Remainder of a modulo a nonzero b.
Poly mod(const Poly& a, const Poly& b, std::uint64_t p);
void divmod(const Poly& a, const Poly& b, std::uint64_t p, Poly& q, Poly& r);
Poly monic(const Poly& a, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
/// a^e mod m.
Poly pow_mod(const Poly& a, const mpz_class& e, const Poly& m, std::uint64_t p);
/// Inverse of a modulo m; requires gcd(a, m) = 1.
Poly inverse_mod(const Poly& a, const Poly& m, std::uint64_t p);

/// Rabin's irreducibility test over F_p.
bool is_irreducible(const Poly& f, std::uint64_t p);

/// First monic irreducible polynomial of degree k in the enumeration order
/// t^k + sum c_j t^j with (c_{k-1} ... c_0) counted upward in base p.
Poly first_irreducible(std::uint64_t p, unsigned k);

}  // namespace charplane::fp

#endif  // CHARPLANE_SRC_FP_POLY_HPP
