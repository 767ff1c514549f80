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

#include "charplane/poly.hpp"

#include <algorithm>
#include <optional>

#include "charplane/error.hpp"

namespace charplane {

BivarPoly BivarPoly::monomial(const Scalar& c, std::uint32_t ex, std::uint32_t ey) {
  BivarPoly r(c.field());
  if (!c.is_zero()) r.terms_.emplace(Exp{ex, ey}, c);
  return r;
}

BivarPoly BivarPoly::linear(const Scalar& a, const Scalar& b, const Scalar& c) {
  BivarPoly r(a.field());
  r.add_term({1, 0}, a);
  r.add_term({0, 1}, b);
  r.add_term({0, 0}, c);
  return r;
}

BivarPoly BivarPoly::from_y_coeffs(const Field& f, const std::vector<UPoly>& coeffs) {
  BivarPoly r(f);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const auto& c = coeffs[j].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].is_zero()) r.terms_.emplace(Exp{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, c[i]);
    }
  }
  return r;
}

void BivarPoly::add_term(const Exp& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar BivarPoly::coeff(std::uint32_t ex, std::uint32_t ey) const {
  auto it = terms_.find(Exp{ex, ey});
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

bool BivarPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
}

int BivarPoly::order() const {
  if (terms_.empty()) return -1;
  std::uint64_t best = UINT64_MAX;
  for (const auto& [e, c] : terms_) best = std::min<std::uint64_t>(best, std::uint64_t{e.x} + e.y);
  return static_cast<int>(best);
}

int BivarPoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(e.x + e.y));
  return best;
}

int BivarPoly::degree_x() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(e.x));
  return best;
}

int BivarPoly::degree_y() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.y); }

BivarPoly BivarPoly::operator-() const {
  BivarPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  if (!field_) field_ = o.field_;
  if (!o.is_zero() && !same_field(field_, o.field_)) raise(ErrorCode::FieldMismatch, "BivarPoly sum across fields");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  if (!field_) field_ = o.field_;
  if (!o.is_zero() && !same_field(field_, o.field_)) raise(ErrorCode::FieldMismatch, "BivarPoly difference across fields");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r(a.field_ ? a.field_ : b.field_);
  if (a.is_zero() || b.is_zero()) return r;
  if (!same_field(a.field_, b.field_)) raise(ErrorCode::FieldMismatch, "BivarPoly product across fields");
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(Exp{ea.x + eb.x, ea.y + eb.y}, ca * cb);
  }
  return r;
}

BivarPoly BivarPoly::scaled(const Scalar& c) const {
  BivarPoly r(field_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, v * c);
  return r;
}

BivarPoly BivarPoly::times_monomial(std::uint32_t ex, std::uint32_t ey) const {
  BivarPoly r(field_);
  for (const auto& [e, v] : terms_) r.terms_.emplace(Exp{e.x + ex, e.y + ey}, v);
  return r;
}

BivarPoly BivarPoly::div_monomial(std::uint32_t ex, std::uint32_t ey) const {
  BivarPoly r(field_);
  for (const auto& [e, v] : terms_) {
    if (e.x < ex || e.y < ey) raise(ErrorCode::NotDivisible, "term not divisible by monomial");
    r.terms_.emplace(Exp{e.x - ex, e.y - ey}, v);
  }
  return r;
}

BivarPoly BivarPoly::pow(unsigned e) const {
  BivarPoly result = constant(Scalar::one(field_));
  BivarPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

BivarPoly BivarPoly::dx() const {
  BivarPoly r(field_);
  for (const auto& [e, v] : terms_) {
    if (e.x == 0) continue;
    r.add_term(Exp{e.x - 1, e.y}, v * Scalar(field_, static_cast<long>(e.x)));
  }
  return r;
}

BivarPoly BivarPoly::dy() const {
  BivarPoly r(field_);
  for (const auto& [e, v] : terms_) {
    if (e.y == 0) continue;
    r.add_term(Exp{e.x, e.y - 1}, v * Scalar(field_, static_cast<long>(e.y)));
  }
  return r;
}

BivarPoly BivarPoly::pth_root() const {
  const std::uint64_t p = field_->characteristic();
  if (p == 0) raise(ErrorCode::NotSupported, "p-th root in characteristic zero");
  BivarPoly r(field_);
  for (const auto& [e, v] : terms_) {
    if (e.x % p != 0 || e.y % p != 0) raise(ErrorCode::Internal, "polynomial is not a p-th power");
    r.terms_.emplace(Exp{static_cast<std::uint32_t>(e.x / p), static_cast<std::uint32_t>(e.y / p)}, v.pth_root());
  }
  return r;
}

BivarPoly BivarPoly::swapped() const {
  BivarPoly r(field_);
  for (const auto& [e, v] : terms_) r.terms_.emplace(Exp{e.y, e.x}, v);
  return r;
}

BivarPoly BivarPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().second.inverse());
}

std::vector<UPoly> BivarPoly::y_coeffs() const {
  std::vector<UPoly> out;
  if (is_zero()) return out;
  std::vector<std::vector<Scalar>> raw(degree_y() + 1);
  for (const auto& [e, v] : terms_) {
    auto& row = raw[e.y];
    if (row.size() <= e.x) row.resize(e.x + 1, Scalar::zero(field_));
    row[e.x] = v;
  }
  out.reserve(raw.size());
  for (auto& row : raw) out.emplace_back(field_, std::move(row));
  return out;
}

UPoly BivarPoly::at_y0() const {
  std::vector<Scalar> c;
  for (const auto& [e, v] : terms_) {
    if (e.y != 0) break;
    if (c.size() <= e.x) c.resize(e.x + 1, Scalar::zero(field_));
    c[e.x] = v;
  }
  return UPoly(field_, std::move(c));
}

UPoly BivarPoly::at_x0() const {
  std::vector<Scalar> c;
  for (const auto& [e, v] : terms_) {
    if (e.x != 0) continue;
    if (c.size() <= e.y) c.resize(e.y + 1, Scalar::zero(field_));
    c[e.y] = v;
  }
  return UPoly(field_, std::move(c));
}

BivarPoly BivarPoly::compose(const BivarPoly& X, const BivarPoly& Y) const {
  BivarPoly result(field_);
  if (is_zero()) return result;
  std::vector<BivarPoly> xp{constant(Scalar::one(field_))};
  std::vector<BivarPoly> yp{constant(Scalar::one(field_))};
  const auto need_x = static_cast<std::size_t>(degree_x());
  while (xp.size() <= need_x) xp.push_back(xp.back() * X);
  const auto need_y = static_cast<std::size_t>(degree_y());
  while (yp.size() <= need_y) yp.push_back(yp.back() * Y);
  std::uint32_t current_y = terms_.begin()->first.y;
  BivarPoly row(field_);
  for (const auto& [e, v] : terms_) {
    if (e.y != current_y) {
      result += row * yp[current_y];
      row = BivarPoly(field_);
      current_y = e.y;
    }
    row += xp[e.x].scaled(v);
  }
  result += row * yp[current_y];
  return result;
}

BivarPoly BivarPoly::embed(const Field& target) const {
  if (same_field(field_, target)) return *this;
  BivarPoly r(target);
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, charplane::embed(v, target));
  return r;
}

BivarPoly BivarPoly::initial_form() const {
  BivarPoly r(field_);
  const int o = order();
  for (const auto& [e, v] : terms_) {
    if (static_cast<int>(e.x + e.y) == o) r.terms_.emplace(e, v);
  }
  return r;
}

bool operator==(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return same_field(a.field_, b.field_) && a.terms_ == b.terms_;
}

std::string BivarPoly::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::pair<Exp, Scalar>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const auto da = a.first.x + a.first.y, db = b.first.x + b.first.y;
    if (da != db) return da > db;
    return a.first.x > b.first.x;
  });
  std::string out;
  for (const auto& [e, v] : ordered) {
    std::string c = v.to_string();
    bool negative = false;
    if (c.find('t') != std::string::npos) {
      c = "(" + c + ")";
    } else if (c.front() == '-') {
      negative = true;
      c.erase(0, 1);
    }
    std::string mono;
    auto var = [&mono](char name, std::uint32_t k) {
      if (k == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (k > 1) mono += "^" + std::to_string(k);
    };
    var('x', e.x);
    var('y', e.y);
    std::string term;
    if (mono.empty()) {
      term = c;
    } else if (c == "1") {
      term = mono;
    } else {
      term = c + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::uint64_t weighted_order(const BivarPoly& f, const Weight& w) {
  if (f.is_zero()) raise(ErrorCode::ZeroInput, "weighted order of zero");
  std::uint64_t best = UINT64_MAX;
  for (const auto& [e, v] : f.terms()) best = std::min(best, e.x * w.n + e.y * w.m);
  return best;
}

WeightedDecomposition weighted_order_and_initial(const BivarPoly& f, const Weight& w) {
  if (w.n == 0 || w.m == 0) raise(ErrorCode::NotSupported, "weights must be positive");
  WeightedDecomposition d;
  d.w_order = weighted_order(f, w);
  d.initial = BivarPoly(f.field());
  d.tail = BivarPoly(f.field());
  for (const auto& [e, v] : f.terms()) {
    auto& target = (e.x * w.n + e.y * w.m == d.w_order) ? d.initial : d.tail;
    target += BivarPoly::monomial(v, e.x, e.y);
  }
  return d;
}

std::pair<BivarPoly, BivarPoly> partial_derivatives(const BivarPoly& f) { return {f.dx(), f.dy()}; }

BivarPoly polar(const BivarPoly& f, const BivarPoly& l) {
  if (l.order() != 1) raise(ErrorCode::NotRegularParameter, "l = " + l.to_string() + " is not of order 1");
  if (f.is_zero() || divides(l, f)) {
    raise(ErrorCode::DegenerateDirection, "l = " + l.to_string() + " divides f");
  }
  return f.dx() * l.dy() - f.dy() * l.dx();
}

BivarPoly line_from_direction(const Scalar& a, const Scalar& b) {
  return BivarPoly::linear(-b, a, Scalar::zero(a.field()));
}

BivarPoly linear_change(const BivarPoly& f, const std::array<std::array<Scalar, 2>, 2>& m) {
  const Scalar det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det.is_zero()) raise(ErrorCode::NotInvertible, "singular linear change");
  const Scalar zero = Scalar::zero(f.field());
  return f.compose(BivarPoly::linear(m[0][0], m[0][1], zero), BivarPoly::linear(m[1][0], m[1][1], zero));
}

namespace {

std::optional<BivarPoly> try_divide(const BivarPoly& a, const BivarPoly& b) {
  if (b.is_zero()) raise(ErrorCode::DivisionByZero, "division by the zero polynomial");
  BivarPoly q(a.field()), r = a;
  const auto& [eb, cb] = b.leading();
  const Scalar inv = cb.inverse();
  while (!r.is_zero()) {
    const auto [er, cr] = r.leading();
    if (er.x < eb.x || er.y < eb.y) return std::nullopt;
    BivarPoly t = BivarPoly::monomial(cr * inv, er.x - eb.x, er.y - eb.y);
    q += t;
    r -= t * b;
  }
  return q;
}

UPoly content(const std::vector<UPoly>& c) {
  UPoly g(c.front().field());
  for (const auto& v : c) {
    g = gcd(g, v);
    if (g.degree() == 0) break;
  }
  return g;
}

void divide_content(std::vector<UPoly>& c, const UPoly& g) {
  if (g.degree() <= 0) {
    return;
  }
  for (auto& v : c) v = v.exact_div(g);
}

void trim(std::vector<UPoly>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// lc(B)^(deg A - deg B + 1) * A mod B in k[x][y].
std::vector<UPoly> pseudo_remainder(std::vector<UPoly> r, const std::vector<UPoly>& b) {
  const std::size_t m = b.size() - 1;
  const UPoly& lc = b.back();
  std::size_t steps = r.size() - m;
  while (r.size() > m) {
    const std::size_t d = r.size() - 1;
    const UPoly s = r.back();
    for (auto& v : r) v = v * lc;
    for (std::size_t i = 0; i <= m; ++i) r[d - m + i] -= s * b[i];
    r.pop_back();
    trim(r);
    --steps;
  }
  for (; steps > 0; --steps) {
    for (auto& v : r) v = v * lc;
  }
  return r;
}

UPoly upow(const UPoly& a, std::size_t e) {
  UPoly r = UPoly::constant(Scalar::one(a.field()));
  for (std::size_t i = 0; i < e; ++i) r = r * a;
  return r;
}

}  // namespace

bool divides(const BivarPoly& d, const BivarPoly& a) { return try_divide(a, d).has_value(); }

BivarPoly exact_div(const BivarPoly& a, const BivarPoly& b) {
  auto q = try_divide(a, b);
  if (!q) raise(ErrorCode::NotDivisible, b.to_string() + " does not divide " + a.to_string());
  return *q;
}

BivarPoly gcd(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (!same_field(a.field(), b.field())) raise(ErrorCode::FieldMismatch, "gcd across fields");
  const Field& f = a.field();
  std::vector<UPoly> A = a.y_coeffs(), B = b.y_coeffs();
  const UPoly ca = content(A), cb = content(B);
  const UPoly c = gcd(ca, cb);
  divide_content(A, ca);
  divide_content(B, cb);
  if (A.size() < B.size()) std::swap(A, B);
  std::vector<UPoly> g;
  UPoly sg = UPoly::constant(Scalar::one(f));
  UPoly sh = sg;
  while (true) {
    if (B.size() == 1) {
      g = {UPoly::constant(Scalar::one(f))};
      break;
    }
    const std::size_t delta = A.size() - B.size();
    std::vector<UPoly> r = pseudo_remainder(A, B);
    if (r.empty()) {
      g = std::move(B);
      break;
    }
    const UPoly divisor = sg * upow(sh, delta);
    for (auto& v : r) v = v.exact_div(divisor);
    A = std::move(B);
    B = std::move(r);
    sg = A.back();
    if (delta == 0) continue;
    sh = upow(sg, delta).exact_div(upow(sh, delta - 1));
  }
  divide_content(g, content(g));
  BivarPoly result = BivarPoly::from_y_coeffs(f, g) * BivarPoly::from_y_coeffs(f, {c});
  return result.monic();
}

BivarPoly radical(const BivarPoly& f) {
  if (f.is_zero()) raise(ErrorCode::ZeroInput, "radical of zero");
  if (f.is_constant()) return BivarPoly::constant(Scalar::one(f.field()));
  BivarPoly fx = f.dx(), fy = f.dy();
  if (fx.is_zero() && fy.is_zero()) return radical(f.pth_root());
  BivarPoly g = gcd(gcd(f, fx), fy);
  BivarPoly part = exact_div(f, g).monic();
  if (g.is_constant()) return part;
  BivarPoly rest = radical(g);
  BivarPoly common = gcd(part, rest);
  return (part * exact_div(rest, common)).monic();
}

ReducedResult reduced_test(const BivarPoly& f) {
  if (f.is_zero()) raise(ErrorCode::ZeroInput, "reducedness of zero");
  ReducedResult r;
  r.squarefree_part = radical(f);
  r.reduced = exact_div(f, r.squarefree_part).is_unit();
  return r;
}

}  // namespace charplane
