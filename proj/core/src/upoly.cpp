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

#include "charplane/upoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>

#include "charplane/error.hpp"
#include "fp_poly.hpp"

namespace charplane {

UPoly::UPoly(Field field, std::vector<Scalar> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (!same_field(c.field(), field_)) raise(ErrorCode::FieldMismatch, "coefficient outside polynomial field");
  }
  trim();
}

UPoly UPoly::constant(const Scalar& c) { return monomial(c, 0); }

UPoly UPoly::monomial(const Scalar& c, unsigned degree) {
  UPoly r(c.field());
  if (c.is_zero()) return r;
  r.c_.assign(degree + 1, Scalar::zero(c.field()));
  r.c_[degree] = c;
  return r;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int UPoly::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

Scalar UPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(field_); }

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (!same_field(field_, o.field_)) raise(ErrorCode::FieldMismatch, "UPoly addition across fields");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (!same_field(field_, o.field_)) raise(ErrorCode::FieldMismatch, "UPoly subtraction across fields");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (!same_field(a.field_, b.field_)) raise(ErrorCode::FieldMismatch, "UPoly product across fields");
  UPoly r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

UPoly UPoly::scaled(const Scalar& c) const {
  UPoly r = *this;
  for (auto& v : r.c_) v *= c;
  r.trim();
  return r;
}

UPoly UPoly::shifted(unsigned n) const {
  UPoly r = *this;
  if (r.is_zero()) return r;
  r.c_.insert(r.c_.begin(), n, Scalar::zero(field_));
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) raise(ErrorCode::DivisionByZero, "UPoly division by zero");
  if (!same_field(field_, d.field_)) raise(ErrorCode::FieldMismatch, "UPoly division across fields");
  UPoly q(field_), r = *this;
  if (r.degree() < d.degree()) return {q, r};
  q.c_.assign(r.c_.size() - d.c_.size() + 1, Scalar::zero(field_));
  const Scalar lead_inv = d.lead().inverse();
  const int dd = d.degree();
  for (int i = r.degree(); i >= dd; --i) {
    if (r.c_[i].is_zero()) continue;
    Scalar c = r.c_[i] * lead_inv;
    for (int j = 0; j <= dd; ++j) r.c_[i - dd + j] -= c * d.c_[j];
    q.c_[i - dd] = std::move(c);
  }
  q.trim();
  r.trim();
  return {q, r};
}

UPoly UPoly::exact_div(const UPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) raise(ErrorCode::NotDivisible, "UPoly division leaves a remainder");
  return q;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inverse());
}

UPoly UPoly::derivative() const {
  UPoly r(field_);
  if (c_.size() <= 1) return r;
  r.c_.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    r.c_.push_back(c_[i] * Scalar(field_, static_cast<long>(i)));
  }
  r.trim();
  return r;
}

Scalar UPoly::eval(const Scalar& at) const {
  Scalar acc = Scalar::zero(field_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
  return acc;
}

UPoly UPoly::pth_root() const {
  const std::uint64_t p = field_->characteristic();
  if (p == 0) raise(ErrorCode::NotSupported, "p-th root in characteristic zero");
  UPoly r(field_);
  if (is_zero()) return r;
  r.c_.assign(c_.size() / p + 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (i % p != 0) raise(ErrorCode::Internal, "polynomial is not a p-th power");
    r.c_[i / p] = c_[i].pth_root();
  }
  r.trim();
  return r;
}

bool operator==(const UPoly& a, const UPoly& b) {
  return same_field(a.field_, b.field_) && a.c_ == b.c_;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string c = c_[i].to_string();
    if (c.find_first_of("+t") != std::string::npos) c = "(" + c + ")";
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += c;
    } else {
      if (!c_[i].is_one()) out += c + "*";
      out += var + (i == 1 ? "" : "^" + std::to_string(i));
    }
  }
  return out;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly pow_mod(const UPoly& a, const mpz_class& e, const UPoly& m) {
  UPoly result = UPoly::constant(Scalar::one(a.field())) % m;
  UPoly base = a % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % m;
  }
  return result;
}

std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& u) {
  if (u.is_zero()) raise(ErrorCode::ZeroInput, "squarefree decomposition of zero");
  std::vector<std::pair<UPoly, unsigned>> out;
  UPoly f = u.monic();
  if (f.degree() <= 0) return out;
  const auto p = static_cast<unsigned>(f.field()->characteristic());
  UPoly fd = f.derivative();
  if (fd.is_zero()) {
    for (auto& [h, m] : squarefree_decomposition(f.pth_root())) out.emplace_back(std::move(h), m * p);
    return out;
  }
  UPoly c = gcd(f, fd);
  UPoly w = f.exact_div(c);
  unsigned i = 1;
  while (w.degree() > 0) {
    UPoly y = gcd(w, c);
    UPoly fac = w.exact_div(y);
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = std::move(y);
    c = c.exact_div(w);
    ++i;
  }
  if (c.degree() > 0) {
    if (p == 0) raise(ErrorCode::Internal, "squarefree decomposition left a cofactor in characteristic 0");
    for (auto& [h, m] : squarefree_decomposition(c.pth_root())) out.emplace_back(std::move(h), m * p);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

// ---------------------------------------------------------------------------
// Characteristic p root finding.

namespace {

std::uint64_t seed_for_roots() { return 0x636861727000ULL; }

Scalar random_element(const Field& f, std::mt19937_64& rng) {
  Scalar::Residues r(f->degree(), 0);
  std::uniform_int_distribution<std::uint64_t> dist(0, f->characteristic() - 1);
  for (auto& v : r) v = dist(rng);
  return Scalar::from_residues(f, r);
}

// Splits a monic squarefree polynomial whose roots all lie in its field.
void equal_degree_split(const UPoly& g, std::mt19937_64& rng, std::vector<Scalar>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0) / g.coeff(1));
    return;
  }
  const Field& f = g.field();
  const UPoly t = UPoly::variable(f);
  const mpz_class q = f->order();
  for (int attempt = 0; attempt < 4096; ++attempt) {
    const Scalar a = random_element(f, rng);
    UPoly h(f);
    if (f->characteristic() == 2) {
      UPoly cur = t.scaled(a) % g;
      h = cur;
      for (unsigned i = 1; i < f->degree(); ++i) {
        cur = (cur * cur) % g;
        h += cur;
      }
    } else {
      h = pow_mod(t + UPoly::constant(a), (q - 1) / 2, g) - UPoly::constant(Scalar::one(f));
    }
    UPoly d = gcd(h, g);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      equal_degree_split(d, rng, out);
      equal_degree_split(g.exact_div(d), rng, out);
      return;
    }
  }
  raise(ErrorCode::Internal, "equal-degree splitting did not converge");
}

// Roots of a squarefree polynomial lying in its own (finite) field.
std::vector<Scalar> finite_roots_squarefree(const UPoly& s, std::mt19937_64& rng) {
  std::vector<Scalar> out;
  if (s.degree() <= 0) return out;
  const Field& f = s.field();
  const UPoly t = UPoly::variable(f);
  UPoly frob = pow_mod(t, f->order(), s);
  UPoly g = gcd(frob - t, s);
  equal_degree_split(g, rng, out);
  return out;
}

// Degrees of the irreducible factors of a squarefree polynomial over a finite field.
std::vector<unsigned> distinct_degrees(const UPoly& s) {
  std::vector<unsigned> degs;
  UPoly rest = s.monic();
  const Field& f = s.field();
  const UPoly t = UPoly::variable(f);
  UPoly h = t % rest;
  const mpz_class q = f->order();
  for (unsigned d = 1; rest.degree() > 0; ++d) {
    if (rest.degree() < 2 * static_cast<int>(d)) {
      degs.push_back(static_cast<unsigned>(rest.degree()));
      break;
    }
    h = pow_mod(h, q, rest);
    UPoly g = gcd(h - t, rest);
    if (g.degree() > 0) {
      degs.push_back(d);
      rest = rest.exact_div(g);
      h = h % rest;
    }
  }
  return degs;
}

struct EmbeddingCache {
  std::mutex m;
  std::map<std::pair<const FieldCtx*, const FieldCtx*>, Scalar> images;
};

EmbeddingCache& embedding_cache() {
  static EmbeddingCache cache;
  return cache;
}

Scalar generator_image(const Field& src, const Field& dst) {
  auto& cache = embedding_cache();
  {
    std::lock_guard lock(cache.m);
    auto it = cache.images.find({src.get(), dst.get()});
    if (it != cache.images.end()) return it->second;
  }
  std::vector<Scalar> coeffs;
  for (auto v : src->modulus()) coeffs.emplace_back(dst, static_cast<long>(v));
  UPoly mod_in_dst(dst, std::move(coeffs));
  std::mt19937_64 rng(seed_for_roots());
  std::vector<Scalar> roots = finite_roots_squarefree(mod_in_dst, rng);
  if (roots.empty()) raise(ErrorCode::Internal, "modulus has no root in the target field");
  auto it = std::min_element(roots.begin(), roots.end(),
                             [](const Scalar& a, const Scalar& b) { return canonical_compare(a, b) < 0; });
  std::lock_guard lock(cache.m);
  return cache.images.emplace(std::make_pair(src.get(), dst.get()), *it).first->second;
}

// ---------------------------------------------------------------------------
// Characteristic zero root finding.

struct IntFactorization {
  std::vector<std::pair<mpz_class, unsigned>> primes;
};

IntFactorization factor_integer(mpz_class n) {
  IntFactorization out;
  n = abs(n);
  if (n == 0) raise(ErrorCode::Internal, "factoring zero");
  for (unsigned long d = 2; d <= 1000000 && mpz_class(d) * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.primes.emplace_back(mpz_class(d), e);
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
      out.primes.emplace_back(n, 1);
    } else if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
      if (mpz_probab_prime_p(r.get_mpz_t(), 30) == 0) {
        raise(ErrorCode::NotSupported, "integer too hard to factor: " + n.get_str());
      }
      out.primes.emplace_back(r, 2);
    } else {
      raise(ErrorCode::NotSupported, "integer too hard to factor: " + n.get_str());
    }
  }
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> ds{1};
  for (const auto& [prime, e] : factor_integer(n).primes) {
    const std::size_t base = ds.size();
    mpz_class pw = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pw *= prime;
      for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pw);
    }
    if (ds.size() > 20000) raise(ErrorCode::NotSupported, "too many rational root candidates");
  }
  return ds;
}

// Writes a nonzero rational as s^2 * d with d a squarefree integer.
std::pair<mpq_class, mpz_class> split_square(const mpq_class& value) {
  mpz_class n = value.get_num() * value.get_den();
  mpz_class sign = n < 0 ? -1 : 1;
  mpz_class square_root = 1, rad = sign;
  for (const auto& [prime, e] : factor_integer(n).primes) {
    for (unsigned i = 0; i < e / 2; ++i) square_root *= prime;
    if (e % 2 == 1) rad *= prime;
  }
  mpq_class s(square_root, value.get_den());
  s.canonicalize();
  return {s, rad};
}

std::optional<mpq_class> rational_sqrt(const mpq_class& v) {
  if (v < 0) return std::nullopt;
  if (v == 0) return mpq_class(0);
  mpz_class n = v.get_num(), d = v.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return mpq_class(rn, rd);
}

// Square root inside Q or Q(sqrt d); nullopt when none exists there.
std::optional<Scalar> field_sqrt(const Scalar& x) {
  const Field& f = x.field();
  if (f->degree() == 1) {
    auto r = rational_sqrt(x.rationals()[0]);
    if (!r) return std::nullopt;
    return Scalar(f, *r);
  }
  const mpq_class a = x.rationals()[0], b = x.rationals()[1];
  const mpq_class d(f->radicand());
  if (b == 0) {
    if (auto r = rational_sqrt(a)) return Scalar(f, *r);
    if (auto r = rational_sqrt(a / d)) return Scalar::from_rationals(f, {mpq_class(0), *r});
    return std::nullopt;
  }
  auto norm_root = rational_sqrt(a * a - d * b * b);
  if (!norm_root) return std::nullopt;
  for (int sgn : {1, -1}) {
    mpq_class u2 = (a + sgn * *norm_root) / 2;
    if (auto u = rational_sqrt(u2); u && *u != 0) {
      mpq_class v = b / (2 * *u);
      Scalar y = Scalar::from_rationals(f, {*u, v});
      if (y * y == x) return y;
    }
  }
  return std::nullopt;
}

// Rational roots of a squarefree polynomial with rational coefficients.
std::vector<mpq_class> rational_roots(const std::vector<mpq_class>& coeffs_in) {
  std::vector<mpq_class> coeffs = coeffs_in;
  std::vector<mpq_class> roots;
  while (!coeffs.empty() && coeffs.front() == 0) {
    roots.emplace_back(0);
    coeffs.erase(coeffs.begin());
  }
  if (coeffs.size() <= 1) return roots;
  mpz_class l = 1;
  for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : coeffs) ints.push_back(mpz_class(c * l));
  const std::vector<mpz_class> num_divs = divisors(ints.front());
  const std::vector<mpz_class> den_divs = divisors(ints.back());
  if (num_divs.size() * den_divs.size() > 200000) raise(ErrorCode::NotSupported, "too many rational root candidates");
  const std::size_t n = ints.size() - 1;
  for (const auto& b : den_divs) {
    for (const auto& a0 : num_divs) {
      for (int sgn : {1, -1}) {
        mpz_class a = sgn * a0;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (g != 1) continue;
        // b^n * P(a/b) via Horner on the homogenised form.
        mpz_class acc = 0;
        std::vector<mpz_class> bp(n + 1);
        bp[0] = 1;
        for (std::size_t i = 1; i <= n; ++i) bp[i] = bp[i - 1] * b;
        for (std::size_t i = n + 1; i-- > 0;) acc = acc * a + ints[i] * bp[n - i];
        if (acc == 0) roots.emplace_back(a, b);
      }
    }
  }
  for (auto& r : roots) r.canonicalize();
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

struct PendingQuadratic {
  UPoly poly;
  unsigned multiplicity;
};

RootSet char0_roots(const UPoly& u) {
  Field field = u.field();
  std::vector<std::pair<Scalar, unsigned>> found;  // in `field` unless quadratic pending
  std::vector<PendingQuadratic> pending;
  std::optional<mpz_class> needed;  // radicand demanded by rational quadratics

  for (auto& [s, m] : squarefree_decomposition(u)) {
    bool rational_coeffs = std::all_of(s.coeffs().begin(), s.coeffs().end(),
                                       [](const Scalar& c) { return c.in_prime_field(); });
    UPoly rest = s;
    if (rational_coeffs) {
      std::vector<mpq_class> qc;
      for (const auto& c : s.coeffs()) qc.push_back(c.rationals()[0]);
      for (const auto& r : rational_roots(qc)) {
        Scalar root(field, r);
        found.emplace_back(root, m);
        UPoly lin(field, {-root, Scalar::one(field)});
        rest = rest.exact_div(lin);
      }
    }
    if (rest.degree() <= 0) continue;
    if (rest.degree() == 1) {
      found.emplace_back(-rest.coeff(0) / rest.coeff(1), m);
      continue;
    }
    if (rest.degree() > 2) {
      raise(ErrorCode::NotSupported,
            "characteristic 0 root finding supports factors of degree <= 2; got " + rest.to_string());
    }
    const Scalar a = rest.coeff(2), b = rest.coeff(1), c = rest.coeff(0);
    const Scalar disc = b * b - Scalar(field, 4L) * a * c;
    if (auto r = field_sqrt(disc)) {
      const Scalar two_a = Scalar(field, 2L) * a;
      found.emplace_back((-b + *r) / two_a, m);
      found.emplace_back((-b - *r) / two_a, m);
      continue;
    }
    if (!disc.in_prime_field()) {
      raise(ErrorCode::NotSupported, "quadratic over " + field->name() + " does not split there");
    }
    auto [sq, rad] = split_square(disc.rationals()[0]);
    if (field->degree() == 2 || (needed && *needed != rad)) {
      raise(ErrorCode::NotSupported, "roots would need a biquadratic extension");
    }
    needed = rad;
    pending.push_back({rest, m});
  }

  RootSet out;
  out.field = needed ? FieldCtx::quadratic(*needed) : field;
  for (auto& [r, m] : found) out.roots.push_back({embed(r, out.field), m});
  for (const auto& pq : pending) {
    UPoly q = embed(pq.poly, out.field);
    const Scalar a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
    const Scalar disc = b * b - Scalar(out.field, 4L) * a * c;
    auto r = field_sqrt(disc);
    if (!r) raise(ErrorCode::Internal, "quadratic failed to split in its splitting field");
    const Scalar two_a = Scalar(out.field, 2L) * a;
    out.roots.push_back({(-b + *r) / two_a, pq.multiplicity});
    out.roots.push_back({(-b - *r) / two_a, pq.multiplicity});
  }
  return out;
}

void sort_roots(std::vector<Root>& roots) {
  std::sort(roots.begin(), roots.end(),
            [](const Root& a, const Root& b) { return canonical_compare(a.value, b.value) < 0; });
}

}  // namespace

Scalar embed(const Scalar& a, const Field& target) {
  const Field& src = a.field();
  if (same_field(src, target)) return a;
  if (src->characteristic() != target->characteristic()) {
    raise(ErrorCode::FieldMismatch, "cannot embed " + src->name() + " into " + target->name());
  }
  if (src->is_finite()) {
    if (target->degree() % src->degree() != 0) {
      raise(ErrorCode::FieldMismatch, "cannot embed " + src->name() + " into " + target->name());
    }
    if (src->degree() == 1) return Scalar(target, static_cast<long>(a.residues()[0]));
    const Scalar theta = generator_image(src, target);
    Scalar acc = Scalar::zero(target);
    const auto& r = a.residues();
    for (std::size_t i = r.size(); i-- > 0;) acc = acc * theta + Scalar(target, static_cast<long>(r[i]));
    return acc;
  }
  if (src->degree() == 1) return Scalar(target, a.rationals()[0]);
  raise(ErrorCode::FieldMismatch, "cannot embed " + src->name() + " into " + target->name());
}

UPoly embed(const UPoly& u, const Field& target) {
  if (same_field(u.field(), target)) return u;
  std::vector<Scalar> c;
  c.reserve(u.coeffs().size());
  for (const auto& v : u.coeffs()) c.push_back(embed(v, target));
  return UPoly(target, std::move(c));
}

Field common_field(const Field& a, const Field& b) {
  if (same_field(a, b)) return a;
  if (a->characteristic() != b->characteristic()) {
    raise(ErrorCode::FieldMismatch, "fields of different characteristic");
  }
  if (a->is_finite()) return FieldCtx::make(a->characteristic(), std::lcm(a->degree(), b->degree()));
  if (a->degree() == 1) return b;
  if (b->degree() == 1) return a;
  raise(ErrorCode::NotSupported, "no common quadratic field for " + a->name() + " and " + b->name());
}

RootSet roots_in_splitting_field(const UPoly& u) {
  if (u.is_zero()) raise(ErrorCode::ZeroInput, "roots of the zero polynomial");
  if (!u.field()->is_finite()) {
    RootSet out = char0_roots(u);
    sort_roots(out.roots);
    return out;
  }
  const Field& f = u.field();
  const auto parts = squarefree_decomposition(u);
  unsigned extra = 1;
  for (const auto& [s, m] : parts) {
    for (unsigned d : distinct_degrees(s)) extra = std::lcm(extra, d);
  }
  RootSet out;
  out.field = extra == 1 ? f : FieldCtx::make(f->characteristic(), f->degree() * extra);
  std::mt19937_64 rng(seed_for_roots());
  for (const auto& [s, m] : parts) {
    for (auto& r : finite_roots_squarefree(embed(s, out.field), rng)) out.roots.push_back({std::move(r), m});
  }
  sort_roots(out.roots);
  return out;
}

std::vector<Root> roots_in_field(const UPoly& u) {
  if (u.is_zero()) raise(ErrorCode::ZeroInput, "roots of the zero polynomial");
  std::vector<Root> out;
  if (!u.field()->is_finite()) {
    RootSet all = char0_roots(u);
    for (auto& r : all.roots) {
      if (same_field(all.field, u.field())) {
        out.push_back(r);
      } else if (r.value.in_prime_field()) {
        out.push_back({Scalar(u.field(), r.value.rationals()[0]), r.multiplicity});
      }
    }
    sort_roots(out);
    return out;
  }
  std::mt19937_64 rng(seed_for_roots());
  for (const auto& [s, m] : squarefree_decomposition(u)) {
    for (auto& r : finite_roots_squarefree(s, rng)) out.push_back({std::move(r), m});
  }
  sort_roots(out);
  return out;
}

}  // namespace charplane
