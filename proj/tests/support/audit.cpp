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


#include "audit.hpp"

#include <numeric>
#include <set>

#include "oracles.hpp"

namespace charplane::testing {

namespace {

std::string str(ExtNat v) { return v.to_string(); }

}  // namespace

Field field_for(std::uint64_t p) { return p == 0 ? FieldCtx::rationals() : FieldCtx::make(p, 1); }

std::vector<std::string> audit_properties(const CorpusMember& m, const BivarPoly& f, const TamenessReport& t) {
  std::vector<std::string> out;
  const Field& k = f.field();
  const std::uint64_t p = k->characteristic();
  const SingularityReport& r = t.invariants;

  if (r.mu.is_finite() && r.mu.value() + r.r < 2 * r.delta + 1) {
    out.push_back("(a) mu = " + str(r.mu) + " < 2*delta-r+1");
  }

  std::uint64_t sum_mu_bar = 0, sum_pairs = 0;
  std::vector<BivarPoly> pieces;
  for (const auto& g : m.pieces) pieces.push_back(g.to_bivar(k));
  for (const auto& g : pieces) sum_mu_bar += invariant_report(g).mu_bar;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) sum_pairs += i0(pieces[i], pieces[j]).value();
  }
  if (r.mu_bar + pieces.size() - 1 != sum_mu_bar + 2 * sum_pairs) {
    out.push_back("(b) mu_bar(f) + s - 1 = " + std::to_string(r.mu_bar + pieces.size() - 1) + " but sum = " +
                  std::to_string(sum_mu_bar + 2 * sum_pairs));
  }

  const auto twice_delta_plus_one = static_cast<std::int64_t>(2 * r.delta + 1);
  const std::int64_t mb = twice_delta_plus_one - static_cast<std::int64_t>(r.r);
  if (mb < 0 || (mb == 0) != (r.ord == 1)) {
    out.push_back("(c) mu_bar = " + std::to_string(mb) + " with ord = " + std::to_string(r.ord));
  }

  std::set<std::string> seen;
  const Scalar zero = Scalar::zero(k), one = Scalar::one(k);
  std::vector<BivarPoly> lines{BivarPoly::y(k), BivarPoly::x(k)};
  for (long c = 1; c <= 3; ++c) lines.push_back(BivarPoly::linear(Scalar(k, c), one, zero));
  for (const auto& l : lines) {
    if (divides(l, f)) continue;
    const std::string key = l.to_string();
    if (!seen.insert(key).second) continue;
    const ExtNat a = i0(f, l);
    const BivarPoly P = polar(f, l);
    const ExtNat b = P.is_zero() ? ExtNat::infinity() : i0(l, P);
    const bool bound = b.is_infinite() || b.value() + 1 >= a.value();
    const bool equal = b.is_finite() && b.value() + 1 == a.value();
    if (!bound || equal != nonzero_mod(a, p)) {
      out.push_back("(d) l = " + key + ": i0(f,l) = " + str(a) + ", i0(l,P) = " + str(b));
    }
  }

  if (t.polar && (p == 0 || r.ord % p != 0) && t.polar->i0_f_l == ExtNat(r.ord)) {
    const PolarIdentityReport& pr = *t.polar;
    if (pr.i0_l_polar != ExtNat(r.ord - 1)) out.push_back("(e) i0(l,P) = " + str(pr.i0_l_polar));
    if (pr.polar.order() != static_cast<int>(r.ord) - 1) {
      out.push_back("(e) ord(P) = " + std::to_string(pr.polar.order()));
    }
    for (const auto& h : pr.factors) {
      if (h.i0_l_h != ExtNat(h.ord)) out.push_back("(e) polar branch with i0(l,h) = " + str(h.i0_l_h));
    }
  }
  return out;
}

OracleAudit audit_oracles(const CorpusMember& m, const Field& k) {
  OracleAudit out;
  if (m.pieces.size() < 2) return out;
  std::vector<BivarPoly> pieces;
  for (const auto& g : m.pieces) pieces.push_back(g.to_bivar(k));
  const ResolutionTree joint = resolve_joint(pieces);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const ExtNat fulton = i0(pieces[i], pieces[j]);
      const ExtNat noether = tracked_intersection(joint, i, j);
      ExtNat resultant;
      try {
        resultant = i0_resultant_oracle(pieces[i], pieces[j]);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::OracleFailure) throw;
        if (fulton != noether) out.discrepancies.push_back(m.label + ": i0 = " + str(fulton) + ", noether = " + str(noether));
        continue;
      }
      ++out.pairs;
      if (fulton != resultant || fulton != noether) {
        out.discrepancies.push_back(m.label + " pieces " + std::to_string(i) + "," + std::to_string(j) + ": i0 = " +
                                    str(fulton) + ", resultant = " + str(resultant) + ", noether = " + str(noether));
      }
    }
  }
  return out;
}

std::vector<std::string> audit_gorenstein(const CorpusMember& m, const Field& k, const TamenessReport& t) {
  std::vector<std::string> out;
  const SingularityReport& r = t.invariants;
  std::uint64_t sum_c = 0;
  for (const auto& b : r.per_branch) {
    const SemigroupFacts facts = semigroup_facts(b.gens);
    const std::uint64_t closed = closed_form_conductor(b.gens);
    std::uint64_t delta = 0;
    for (auto mult : b.path_mults) delta += mult * (mult - 1) / 2;
    if (facts.conductor != closed || facts.conductor != 2 * delta) {
      out.push_back(m.label + " branch " + std::to_string(b.id) + ": gaps " + std::to_string(facts.conductor) +
                    ", closed form " + std::to_string(closed) + ", 2*delta " + std::to_string(2 * delta));
    }
    sum_c += facts.conductor;
  }
  std::vector<BivarPoly> pieces;
  for (const auto& g : m.pieces) pieces.push_back(g.to_bivar(k));
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) sum_c += 2 * i0(pieces[i], pieces[j]).value();
  }
  if (sum_c != 2 * r.delta || r.c != 2 * r.delta) {
    out.push_back(m.label + ": composite conductor " + std::to_string(sum_c) + ", 2*delta " + std::to_string(2 * r.delta));
  }
  return out;
}

std::vector<std::string> audit_soundness(const TamenessReport& t, std::uint64_t p) {
  std::vector<std::string> out;
  const Verdict direct = t.direct.verdict;
  for (const auto& c : t.criteria) {
    if (!c.applicable) continue;
    if (c.kind == CriterionKind::Sufficient && c.verdict == Verdict::True && direct != Verdict::True) {
      out.push_back(c.name + " claims tame, DIRECT does not");
    }
    if (c.kind == CriterionKind::Equivalence && c.verdict != direct) {
      out.push_back(c.name + " = " + std::string(to_string(c.verdict)) + ", DIRECT = " + std::string(to_string(direct)));
    }
  }
  if (p == 0 && direct != Verdict::True) out.push_back("characteristic 0 member is not tame");
  for (const auto& s : t.inconsistencies) out.push_back("report: " + s);
  return out;
}

std::vector<std::string> audit_merle(const MerleReport& m) {
  std::vector<std::string> out = m.violations;
  const std::uint64_t n = m.n;
  std::vector<std::uint64_t> e;
  for (std::size_t k = 0; k < m.gens.size(); ++k) e.push_back(std::gcd(k == 0 ? 0 : e.back(), m.gens[k]));
  const std::size_t g = m.gens.size() - 1;
  if (m.bundles.size() != g) out.push_back("expected " + std::to_string(g) + " bundles");
  std::uint64_t total = 0;
  for (const auto& b : m.bundles) {
    if (b.k < 1 || b.k > g) {
      out.push_back("bundle index " + std::to_string(b.k));
      continue;
    }
    const std::uint64_t expected = n / e[b.k] - n / e[b.k - 1];
    if (b.ord_h != expected) {
      out.push_back("(a) ord(h_" + std::to_string(b.k) + ") = " + std::to_string(b.ord_h) + ", expected " + std::to_string(expected));
    }
    total += b.ord_h;
  }
  for (const auto& h : m.factors) {
    if (h.bundle < 1 || h.bundle > g) {
      out.push_back("polar branch outside every bundle");
      continue;
    }
    const std::size_t k = h.bundle;
    mpq_class expected(static_cast<unsigned long>(e[k - 1] * m.gens[k]), static_cast<unsigned long>(n));
    expected.canonicalize();
    bool ok = h.i0_f_h.is_finite() && h.ord > 0;
    if (ok) {
      mpq_class ratio(static_cast<unsigned long>(h.i0_f_h.value()), static_cast<unsigned long>(h.ord));
      ratio.canonicalize();
      ok = ratio == expected;
    }
    if (!ok) {
      out.push_back("(b1) i0(f,h)/ord(h) = " + str(h.i0_f_h) + "/" + std::to_string(h.ord) + " in bundle " + std::to_string(k));
    }
    if (h.ord % (n / e[k - 1]) != 0) {
      out.push_back("(b2) ord(h) = " + std::to_string(h.ord) + " not divisible by " + std::to_string(n / e[k - 1]));
    }
  }
  std::uint64_t factor_total = 0;
  for (const auto& h : m.factors) factor_total += h.ord * h.power;
  if (total != n - 1 || factor_total != n - 1 || m.total_ord != n - 1) {
    out.push_back("sum ord(h_k) = " + std::to_string(total) + ", expected " + std::to_string(n - 1));
  }
  return out;
}

}  // namespace charplane::testing
