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

#include "charplane/tameness.hpp"

#include "charplane/error.hpp"
#include "charplane/intersect.hpp"
#include "charplane/newton.hpp"
#include "charplane/resolve.hpp"

namespace charplane {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::False:
      return "false";
    case Verdict::True:
      return "true";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::string_view to_string(CriterionKind k) noexcept {
  switch (k) {
    case CriterionKind::Direct:
      return "direct";
    case CriterionKind::Equivalence:
      return "equivalence";
    case CriterionKind::Sufficient:
      return "sufficient";
  }
  return "sufficient";
}

namespace {

Verdict from_bool(bool b) { return b ? Verdict::True : Verdict::False; }

std::string weight_string(const Weight& w) {
  return "(" + std::to_string(w.n) + "," + std::to_string(w.m) + ")";
}

CriterionResult not_applicable(std::string name, CriterionKind kind, std::string witness) {
  CriterionResult c;
  c.name = std::move(name);
  c.kind = kind;
  c.applicable = false;
  c.verdict = Verdict::Unknown;
  c.witness = std::move(witness);
  return c;
}

std::string divisible_list(const std::vector<std::uint64_t>& gens, std::size_t from, std::uint64_t p) {
  std::string out;
  for (std::size_t k = from; k < gens.size(); ++k) {
    if (p != 0 && gens[k] % p == 0) {
      if (!out.empty()) out += ", ";
      out += "beta_" + std::to_string(k) + " = " + std::to_string(gens[k]) + " = 0 mod " + std::to_string(p);
    }
  }
  return out;
}

}  // namespace

CriterionResult tame_direct(const BivarPoly& f) { return tame_direct(invariant_report(f)); }

CriterionResult tame_direct(const SingularityReport& rep) {
  CriterionResult c;
  c.name = "DIRECT";
  c.kind = CriterionKind::Direct;
  c.applicable = true;
  const std::uint64_t rhs = 2 * rep.delta + 1 - rep.r;
  if (rep.mu.is_infinite()) {
    c.verdict = Verdict::False;
    c.witness = "mu infinite";
  } else {
    c.verdict = from_bool(rep.mu.value() == rhs);
    c.witness = "mu = " + rep.mu.to_string() + ", 2*delta-r+1 = " + std::to_string(rhs);
  }
  return c;
}

CriterionResult sqh_test(const BivarPoly& f, std::optional<Weight> w) {
  if (f.is_zero()) raise(ErrorCode::ZeroInput, "semi-quasihomogeneity of zero");
  const Weight weight = w ? *w : single_edge_weight(f).value_or(Weight{1, 1});
  const WeightedDecomposition d = weighted_order_and_initial(f, weight);
  const std::string where = "w = " + weight_string(weight) + ", in_w(f) = " + d.initial.to_string();
  if (!is_squarefree(d.initial)) {
    return not_applicable("SQH", CriterionKind::Equivalence, where + " has a multiple factor");
  }
  CriterionResult c;
  c.name = "SQH";
  c.kind = CriterionKind::Equivalence;
  c.applicable = true;
  const bool ok = only_trivial_critical_point(d.initial);
  c.verdict = from_bool(ok);
  c.witness = where + (ok ? "; partials vanish only at the origin" : "; partials share a zero off the origin");
  return c;
}

CriterionResult newton_nondegenerate_test(const BivarPoly& f) {
  const auto [mono, g] = split_monomial(f);
  if (mono.i >= 2 || mono.j >= 2) {
    return not_applicable("NEWTON_ND", CriterionKind::Sufficient, "repeated coordinate-axis factor");
  }
  CriterionResult c;
  c.name = "NEWTON_ND";
  c.kind = CriterionKind::Sufficient;
  if (g.is_unit()) {
    c.applicable = true;
    c.verdict = Verdict::True;
    c.witness = "monomial times a unit";
    return c;
  }
  const std::uint64_t p = f.field()->characteristic();
  const NewtonDiagram diagram = newton_diagram(g);
  std::string degenerate;
  for (const auto& v : diagram.vertices) {
    if (p != 0 && v.i % p == 0 && v.j % p == 0 && degenerate.empty()) {
      degenerate = "vertex form of x^" + std::to_string(v.i) + "*y^" + std::to_string(v.j) + " is degenerate";
    }
  }
  for (const auto& e : diagram.edges) {
    const BivarPoly form = edge_form(g, e);
    if (!is_squarefree(split_monomial(form).second)) {
      return not_applicable("NEWTON_ND", CriterionKind::Sufficient,
                            "face form " + form.to_string() + " has a multiple factor");
    }
    if (!no_torus_critical_point(form) && degenerate.empty()) {
      degenerate = "face form " + form.to_string() + " (w = " + weight_string(e.weight) + ") is degenerate";
    }
  }
  c.applicable = true;
  c.verdict = from_bool(degenerate.empty());
  c.witness = degenerate.empty() ? std::to_string(diagram.edges.size()) + " nondegenerate faces" : degenerate;
  return c;
}

std::vector<CriterionResult> nguyen_criteria(const BivarPoly& f, const std::optional<BivarPoly>& l) {
  const SingularityReport rep = invariant_report(f);
  const BivarPoly line = l ? *l : generic_transversal(f);
  return nguyen_criteria(f, rep, evaluate_polar(f, line));
}

std::vector<CriterionResult> nguyen_criteria(const BivarPoly& f, const SingularityReport& rep,
                                             const PolarIdentityReport& polar) {
  const std::uint64_t p = f.field()->characteristic();
  std::vector<CriterionResult> out;
  const std::string ps = std::to_string(p);
  if (p == 0) {
    for (const char* name : {"NGUYEN_MU_BOUND", "KAPPA_BOUND"}) {
      out.push_back(not_applicable(name, CriterionKind::Sufficient, "characteristic 0"));
    }
    out.push_back(not_applicable("POLAR_FACTORS", CriterionKind::Equivalence, "characteristic 0"));
    return out;
  }

  if (rep.mu.is_infinite()) {
    out.push_back(not_applicable("NGUYEN_MU_BOUND", CriterionKind::Sufficient, "mu infinite"));
  } else {
    CriterionResult c;
    c.name = "NGUYEN_MU_BOUND";
    c.kind = CriterionKind::Sufficient;
    c.applicable = true;
    const std::uint64_t bound = rep.mu.value() + rep.ord - 1;
    c.verdict = p > bound ? Verdict::True : Verdict::Unknown;
    c.witness = "mu+ord-1 = " + std::to_string(bound) + ", p = " + ps;
    out.push_back(c);
  }

  const bool transversal = polar.i0_f_l == ExtNat(rep.ord);
  const std::string lname = "l = " + polar.l.to_string();
  if (!transversal) {
    out.push_back(not_applicable("KAPPA_BOUND", CriterionKind::Sufficient, lname + " is not transversal"));
    out.push_back(not_applicable("POLAR_FACTORS", CriterionKind::Equivalence, lname + " is not transversal"));
    return out;
  }
  {
    CriterionResult c;
    c.name = "KAPPA_BOUND";
    c.kind = CriterionKind::Sufficient;
    c.applicable = true;
    const bool below = polar.i0_f_polar.is_finite() && polar.i0_f_polar.value() < p;
    c.verdict = below ? Verdict::True : Verdict::Unknown;
    c.witness = lname + ", i0(f,P_l(f)) = " + polar.i0_f_polar.to_string() + ", p = " + ps;
    out.push_back(c);
  }
  if (p <= rep.ord) {
    out.push_back(not_applicable("POLAR_FACTORS", CriterionKind::Equivalence,
                                 "p = " + ps + " <= ord(f) = " + std::to_string(rep.ord)));
  } else {
    CriterionResult c;
    c.name = "POLAR_FACTORS";
    c.kind = CriterionKind::Equivalence;
    c.applicable = true;
    c.verdict = from_bool(polar.condition_iii);
    c.witness = lname + ", " + std::to_string(polar.factors.size()) + " polar branches";
    for (const auto& s : polar.failing_factors) c.witness += "; " + s;
    out.push_back(c);
  }
  return out;
}

CriterionResult semigroup_criterion(const BivarPoly& f) {
  return semigroup_criterion(invariant_report(f), f.field()->characteristic());
}

CriterionResult semigroup_criterion(const SingularityReport& rep, std::uint64_t p) {
  if (rep.r != 1) raise(ErrorCode::NotIrreducible, "f has " + std::to_string(rep.r) + " branches");
  if (rep.ord < 2) return not_applicable("SEMIGROUP", CriterionKind::Sufficient, "smooth branch");
  const BranchData& b = rep.per_branch.front();
  CriterionResult c;
  c.name = "SEMIGROUP";
  c.applicable = true;
  std::string gens;
  for (auto v : b.gens) gens += (gens.empty() ? "" : ",") + std::to_string(v);
  gens = "Gamma = <" + gens + ">, n* = " + std::to_string(b.n_star);
  if (p == 0) {
    c.kind = CriterionKind::Sufficient;
    c.verdict = Verdict::True;
    c.witness = gens + "; characteristic 0";
  } else if (p > b.n_star) {
    c.kind = CriterionKind::Equivalence;
    const std::string bad = divisible_list(b.gens, 1, p);
    c.verdict = from_bool(bad.empty());
    c.witness = gens + "; p > n*" + (bad.empty() ? "" : "; " + bad);
  } else if (b.gens.size() == 2) {
    c.kind = CriterionKind::Equivalence;
    const std::string bad = divisible_list(b.gens, 0, p);
    c.verdict = from_bool(bad.empty());
    c.witness = gens + "; two generators" + (bad.empty() ? "" : "; " + bad);
  } else {
    c.kind = CriterionKind::Sufficient;
    const std::string bad = divisible_list(b.gens, 0, p);
    c.verdict = bad.empty() ? Verdict::True : Verdict::Unknown;
    c.witness = gens + "; p <= n*, sufficient test only" + (bad.empty() ? "" : "; " + bad);
  }
  return c;
}

MerleReport merle_verify(const BivarPoly& f_in) {
  const ResolutionTree own = branch_decompose(f_in);
  if (own.branches.size() != 1) {
    raise(ErrorCode::NotIrreducible, "f has " + std::to_string(own.branches.size()) + " branches");
  }
  const BranchData& branch = own.branches.front();
  const std::uint64_t p = f_in.field()->characteristic();
  MerleReport rep;
  rep.n = static_cast<std::uint64_t>(f_in.order());
  rep.gens = branch.gens;
  rep.e = branch.e;
  if (p != 0 && rep.n % p == 0) raise(ErrorCode::HypothesisFailed, "ord(f) = " + std::to_string(rep.n) + " = 0 mod p");
  BivarPoly f = f_in;
  if (f.at_x0().order() != static_cast<int>(rep.n)) {
    f = f.swapped();
    rep.swapped = true;
    if (f.at_x0().order() != static_cast<int>(rep.n)) {
      raise(ErrorCode::HypothesisFailed, "neither ord f(0,y) nor ord f(x,0) equals ord(f)");
    }
  }
  const BivarPoly fy = f.dy();
  const ResolutionTree tree = resolve_joint({f, fy});
  const std::size_t g = rep.gens.size() - 1;
  for (std::size_t k = 1; k <= g; ++k) {
    MerleBundle bundle;
    bundle.k = k;
    bundle.expected_ord = rep.n / rep.e[k] - rep.n / rep.e[k - 1];
    bundle.expected_ratio = mpq_class(rep.e[k - 1] * rep.gens[k], rep.n);
    bundle.expected_ratio.canonicalize();
    bundle.ord_divisibility_ok = true;
    rep.bundles.push_back(bundle);
  }
  for (auto id : branches_of(tree, 1)) {
    MerleFactor h;
    h.ord = tree.branches[id].path_mults.front();
    h.power = tree.branches[id].tracked_power[1];
    h.i0_f_h = tracked_branch_intersection(tree, 0, id);
    rep.total_ord += h.ord * h.power;
    if (h.i0_f_h.is_infinite()) {
      rep.violations.push_back("a polar branch is a component of f");
      rep.factors.push_back(h);
      continue;
    }
    h.ratio = mpq_class(h.i0_f_h.value(), h.ord);
    h.ratio.canonicalize();
    for (auto& bundle : rep.bundles) {
      if (bundle.expected_ratio != h.ratio) continue;
      h.bundle = bundle.k;
      const std::uint64_t modulus = rep.n / rep.e[bundle.k - 1];
      h.ord_divisibility_ok = h.ord % modulus == 0;
      bundle.ord_h += h.ord * h.power;
      bundle.contact_ratios.push_back(h.ratio);
      bundle.ord_divisibility_ok = bundle.ord_divisibility_ok && h.ord_divisibility_ok;
      if (!h.ord_divisibility_ok) {
        rep.violations.push_back("(b2): polar branch of order " + std::to_string(h.ord) + " not divisible by " +
                                 std::to_string(modulus));
      }
      break;
    }
    if (h.bundle == 0) rep.violations.push_back("(b1): contact ratio " + h.ratio.get_str() + " matches no bundle");
    rep.factors.push_back(h);
  }
  for (auto& bundle : rep.bundles) {
    bundle.ord_ok = bundle.ord_h == bundle.expected_ord;
    if (!bundle.ord_ok) {
      rep.violations.push_back("(a): ord(h_" + std::to_string(bundle.k) + ") = " + std::to_string(bundle.ord_h) +
                               ", expected " + std::to_string(bundle.expected_ord));
    }
  }
  if (rep.total_ord + 1 != rep.n) {
    rep.violations.push_back("sum of ord(h_k) = " + std::to_string(rep.total_ord) + ", expected n-1");
  }
  return rep;
}

CriterionResult merle_criterion(const BivarPoly& f, const SingularityReport& rep, MerleReport* out) {
  const std::uint64_t p = f.field()->characteristic();
  if (rep.r != 1) return not_applicable("MERLE", CriterionKind::Equivalence, "f is reducible");
  if (rep.ord < 2) return not_applicable("MERLE", CriterionKind::Equivalence, "smooth branch");
  if (p != 0 && rep.ord % p == 0) return not_applicable("MERLE", CriterionKind::Equivalence, "ord(f) = 0 mod p");
  const MerleReport m = merle_verify(f);
  if (out) *out = m;
  const std::uint64_t n_star = rep.per_branch.front().n_star;
  if (p != 0 && p <= n_star) {
    return not_applicable("MERLE", CriterionKind::Equivalence,
                          "p = " + std::to_string(p) + " <= n* = " + std::to_string(n_star));
  }
  CriterionResult c;
  c.name = "MERLE";
  c.kind = CriterionKind::Equivalence;
  c.applicable = true;
  std::string bad;
  for (const auto& h : m.factors) {
    if (!nonzero_mod(h.i0_f_h, p)) bad += (bad.empty() ? "" : ", ") + ("i0(f,h) = " + h.i0_f_h.to_string());
  }
  c.verdict = from_bool(bad.empty());
  c.witness = std::to_string(m.factors.size()) + " branches of f_y in " + std::to_string(m.bundles.size()) +
              " bundles" + (bad.empty() ? "" : "; divisible by p: " + bad);
  if (!m.violations.empty()) c.witness += "; violations: " + std::to_string(m.violations.size());
  return c;
}

TamenessReport evaluate_tameness(const BivarPoly& f, const TamenessOptions& options) {
  TamenessReport rep;
  rep.invariants = invariant_report(f);
  const SingularityReport& inv = rep.invariants;
  rep.direct = tame_direct(inv);
  rep.criteria.push_back(sqh_test(f, options.weight));
  rep.criteria.push_back(newton_nondegenerate_test(f));

  std::optional<BivarPoly> line = options.line;
  std::string line_problem;
  if (!line) {
    try {
      line = generic_transversal(f);
    } catch (const HypothesisFailedError& e) {
      line_problem = e.what();
    }
  }
  if (line) {
    try {
      rep.polar = evaluate_polar(f, *line);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateDirection && e.code() != ErrorCode::NotRegularParameter) throw;
      line_problem = e.what();
    }
  }
  if (rep.polar) {
    for (auto& c : nguyen_criteria(f, inv, *rep.polar)) rep.criteria.push_back(std::move(c));
  } else {
    PolarIdentityReport none;
    none.l = BivarPoly(f.field());
    none.i0_f_l = ExtNat::infinity();
    for (auto& c : nguyen_criteria(f, inv, none)) {
      if (c.name != "NGUYEN_MU_BOUND" && f.field()->characteristic() != 0) c.witness = line_problem;
      rep.criteria.push_back(std::move(c));
    }
  }

  const std::uint64_t p = f.field()->characteristic();
  if (inv.r == 1) {
    rep.criteria.push_back(semigroup_criterion(inv, p));
    MerleReport m;
    rep.criteria.push_back(merle_criterion(f, inv, &m));
    if (!m.factors.empty() || m.n != 0) rep.merle = m;
  } else {
    rep.criteria.push_back(not_applicable("SEMIGROUP", CriterionKind::Equivalence, "f is reducible"));
    rep.criteria.push_back(not_applicable("MERLE", CriterionKind::Equivalence, "f is reducible"));
  }

  const bool tame = rep.direct.verdict == Verdict::True;
  for (const auto& c : rep.criteria) {
    if (!c.applicable || c.verdict == Verdict::Unknown) continue;
    if (c.kind == CriterionKind::Sufficient && c.verdict == Verdict::True && !tame) {
      rep.inconsistencies.push_back(c.name + " claims tame while DIRECT is false");
    }
    if (c.kind == CriterionKind::Equivalence && (c.verdict == Verdict::True) != tame) {
      rep.inconsistencies.push_back(c.name + " disagrees with DIRECT");
    }
  }
  if (rep.merle) {
    for (const auto& v : rep.merle->violations) rep.inconsistencies.push_back("MERLE " + v);
  }
  if (rep.polar && !rep.polar->factors_consistent) {
    rep.inconsistencies.push_back("polar branch sum differs from i0(f, P_l(f))");
  }
  rep.consistent = rep.inconsistencies.empty();
  return rep;
}

}  // namespace charplane
