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

#include "charplane/intersect.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "charplane/error.hpp"

namespace charplane {

std::pair<BivarPoly, BivarPoly> unify(const BivarPoly& f, const BivarPoly& g) {
  if (same_field(f.field(), g.field())) return {f, g};
  const Field k = common_field(f.field(), g.field());
  return {f.embed(k), g.embed(k)};
}

namespace {

// Removes a common factor that is a unit at the origin; reports a common branch.
bool strip_common_factor(BivarPoly& f, BivarPoly& g) {
  BivarPoly d = gcd(f, g);
  if (d.is_constant()) return true;
  if (!d.is_unit()) return false;
  f = exact_div(f, d);
  g = exact_div(g, d);
  return true;
}

using Rows = std::vector<UPoly>;

UPoly truncated(const UPoly& u, std::size_t n) {
  if (u.degree() < static_cast<int>(n)) return u;
  const auto& c = u.coeffs();
  return UPoly(u.field(), std::vector<Scalar>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n)));
}

UPoly lowered(const UPoly& u, std::size_t n) {
  const auto& c = u.coeffs();
  return UPoly(u.field(), std::vector<Scalar>(c.begin() + static_cast<std::ptrdiff_t>(n), c.end()));
}

// Rows of f modulo m^t: row j keeps x-degrees below t - j.
Rows truncated_rows(const BivarPoly& f, std::size_t t) {
  Rows rows = f.y_coeffs();
  if (rows.size() > t) rows.resize(t);
  for (std::size_t j = 0; j < rows.size(); ++j) rows[j] = truncated(rows[j], t - j);
  while (!rows.empty() && rows.back().is_zero()) rows.pop_back();
  return rows;
}

bool unit_rows(const Rows& r) { return !r.empty() && !r[0].is_zero() && r[0].order() == 0; }

// Local elimination on representatives modulo m^t; nullopt when t is too small.
std::optional<std::uint64_t> local_i0(const BivarPoly& f, const BivarPoly& g, std::size_t t) {
  Rows F = truncated_rows(f, t), G = truncated_rows(g, t);
  std::uint64_t total = 0;
  while (true) {
    if (F.empty() || G.empty()) return std::nullopt;
    if (unit_rows(F) || unit_rows(G)) return total;
    if (F[0].is_zero() && G[0].is_zero()) return std::nullopt;
    if (F[0].is_zero()) std::swap(F, G);
    if (G[0].is_zero()) {
      total += static_cast<std::uint64_t>(F[0].order());
      if (total >= t) return std::nullopt;
      G.erase(G.begin());
      while (!G.empty() && G.back().is_zero()) G.pop_back();
      continue;
    }
    if (F[0].order() > G[0].order()) std::swap(F, G);
    const auto r = static_cast<std::size_t>(F[0].order()), s = static_cast<std::size_t>(G[0].order());
    const UPoly u = lowered(F[0], r), v = lowered(G[0], s);
    const std::size_t rows = std::max(F.size(), G.size());
    G.resize(rows, UPoly(f.field()));
    for (std::size_t j = 0; j < rows; ++j) {
      UPoly next = u * G[j];
      if (j < F.size()) next -= (v * F[j]).shifted(static_cast<unsigned>(s - r));
      G[j] = truncated(next, t - j);
    }
    while (!G.empty() && G.back().is_zero()) G.pop_back();
  }
}

}  // namespace

ExtNat i0(const BivarPoly& f_in, const BivarPoly& g_in) {
  if (f_in.is_zero() || g_in.is_zero()) raise(ErrorCode::ZeroInput, "intersection with the zero polynomial");
  auto [f, g] = unify(f_in, g_in);
  if (f.is_unit() || g.is_unit()) return 0;
  if (!strip_common_factor(f, g)) return ExtNat::infinity();
  std::size_t t = 2 * static_cast<std::size_t>(f.order()) * static_cast<std::size_t>(g.order()) + 2;
  while (true) {
    if (auto n = local_i0(f, g, t)) return *n;
    t *= 2;
  }
}

UPoly resultant_y(const BivarPoly& f, const BivarPoly& g) {
  const Field& k = f.field();
  const std::vector<UPoly> A = f.y_coeffs(), B = g.y_coeffs();
  const std::size_t m = A.size() - 1, n = B.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return UPoly::constant(Scalar::one(k));
  std::vector<std::vector<UPoly>> mat(size, std::vector<UPoly>(size, UPoly(k)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) mat[i][i + j] = A[m - j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) mat[n + i][i + j] = B[n - j];
  }
  // Fraction-free Gaussian elimination (Bareiss).
  UPoly prev = UPoly::constant(Scalar::one(k));
  bool negate = false;
  for (std::size_t c = 0; c + 1 < size; ++c) {
    if (mat[c][c].is_zero()) {
      std::size_t r = c + 1;
      while (r < size && mat[r][c].is_zero()) ++r;
      if (r == size) return UPoly(k);
      std::swap(mat[c], mat[r]);
      negate = !negate;
    }
    for (std::size_t i = c + 1; i < size; ++i) {
      for (std::size_t j = c + 1; j < size; ++j) {
        mat[i][j] = (mat[i][j] * mat[c][c] - mat[i][c] * mat[c][j]).exact_div(prev);
      }
      mat[i][c] = UPoly(k);
    }
    prev = mat[c][c];
  }
  UPoly det = mat[size - 1][size - 1];
  return negate ? -det : det;
}

ExtNat i0_resultant_oracle(const BivarPoly& f_in, const BivarPoly& g_in) {
  if (f_in.is_zero() || g_in.is_zero()) raise(ErrorCode::ZeroInput, "intersection with the zero polynomial");
  auto [f, g] = unify(f_in, g_in);
  if (!strip_common_factor(f, g)) raise(ErrorCode::InfiniteIntersection, "common branch through the origin");
  if (f.is_unit() || g.is_unit()) return 0;
  const Field& k = f.field();
  const std::uint64_t attempts =
      2 * static_cast<std::uint64_t>(f.total_degree()) * static_cast<std::uint64_t>(g.total_degree()) + 1;
  const Scalar zero = Scalar::zero(k), one = Scalar::one(k);
  for (std::uint64_t i = 1; i <= attempts; ++i) {
    const Scalar c = Scalar::from_index(k, mpz_class(static_cast<unsigned long>(i)));
    const BivarPoly X = BivarPoly::linear(one, c, zero);
    const BivarPoly Y = BivarPoly::y(k);
    const BivarPoly F = f.compose(X, Y), G = g.compose(X, Y);
    if (F.y_coeffs().back().degree() != 0) continue;
    if (G.y_coeffs().back().degree() != 0) continue;
    const UPoly common = gcd(F.at_x0(), G.at_x0());
    if (common.degree() != common.order()) continue;
    const UPoly res = resultant_y(F, G);
    if (res.is_zero()) raise(ErrorCode::Internal, "resultant vanished without a common factor");
    return static_cast<std::uint64_t>(res.order());
  }
  raise(ErrorCode::OracleFailure, "no admissible shear among " + std::to_string(attempts) + " candidates");
}

}  // namespace charplane
