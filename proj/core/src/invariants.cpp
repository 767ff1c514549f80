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

#include "charplane/invariants.hpp"

#include "charplane/intersect.hpp"

namespace charplane {

std::string_view to_string(Tristate t) noexcept {
  switch (t) {
    case Tristate::False:
      return "false";
    case Tristate::True:
      return "true";
    case Tristate::Indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

HypothesisFailedError::HypothesisFailedError(const std::string& what, PolarIdentityReport report)
    : Error(ErrorCode::HypothesisFailed, what), report_(std::move(report)) {}

bool nonzero_mod(ExtNat v, std::uint64_t p) {
  if (v.is_infinite()) return false;
  return p == 0 || v.value() % p != 0;
}

namespace {

void require_singular_input(const BivarPoly& f) {
  if (f.is_zero()) raise(ErrorCode::ZeroInput, "zero polynomial");
  if (f.is_unit()) raise(ErrorCode::NotSupported, f.to_string() + " does not pass through the origin");
}

ExtNat minus_one(ExtNat a, ExtNat b) {
  if (a.is_infinite() || b.is_infinite()) return ExtNat::infinity();
  return a.value() + b.value() - 1;
}

}  // namespace

ExtNat milnor_number(const BivarPoly& f) {
  if (f.is_zero()) raise(ErrorCode::ZeroInput, "Milnor number of zero");
  const auto [fx, fy] = partial_derivatives(f);
  if (fx.is_zero() && fy.is_zero()) return ExtNat::infinity();
  if (fx.is_zero()) return fy.is_unit() ? ExtNat(0) : ExtNat::infinity();
  if (fy.is_zero()) return fx.is_unit() ? ExtNat(0) : ExtNat::infinity();
  return i0(fx, fy);
}

std::uint64_t mu_bar(const BivarPoly& f) {
  require_singular_input(f);
  const ResolutionTree tree = branch_decompose(f);
  return 2 * tree.delta - tree.branches.size() + 1;
}

SingularityReport invariant_report(const BivarPoly& f) {
  require_singular_input(f);
  return invariant_report(f, branch_decompose(f));
}

SingularityReport invariant_report(const BivarPoly& f, const ResolutionTree& tree) {
  require_singular_input(f);
  SingularityReport rep;
  rep.ord = static_cast<std::uint64_t>(f.order());
  rep.mu = milnor_number(f);
  const DeltaConductor dc = delta_and_conductor(tree);
  rep.delta = dc.delta;
  rep.r = dc.r;
  rep.c = dc.c;
  rep.mu_bar = dc.c + 1 - dc.r;
  rep.per_branch = tree.branches;
  rep.pairwise = tree.pairwise;
  rep.field_degree = tree.max_field_degree;
  if (rep.mu.is_infinite()) {
    rep.milnor_formula_holds = Tristate::Indeterminate;
  } else {
    rep.milnor_formula_holds = rep.mu.value() == rep.mu_bar ? Tristate::True : Tristate::False;
  }
  return rep;
}

BivarPoly generic_transversal(const BivarPoly& f) {
  require_singular_input(f);
  const Field& k = f.field();
  const auto ord = static_cast<std::uint64_t>(f.order());
  std::vector<BivarPoly> candidates;
  const mpz_class q = k->order();
  const std::uint64_t tries = ord + 2;
  for (std::uint64_t i = 0; i < tries; ++i) {
    if (k->is_finite() && mpz_class(static_cast<unsigned long>(i)) >= q) break;
    const Scalar c = Scalar::from_index(k, mpz_class(static_cast<unsigned long>(i)));
    candidates.push_back(BivarPoly::linear(c, Scalar::one(k), Scalar::zero(k)));
  }
  candidates.push_back(BivarPoly::x(k));
  for (const auto& l : candidates) {
    if (divides(l, f)) continue;
    if (i0(f, l) == ExtNat(ord)) return l;
  }
  PolarIdentityReport empty;
  throw HypothesisFailedError("no transversal line among " + std::to_string(candidates.size()) + " candidates",
                              std::move(empty));
}

PolarIdentityReport evaluate_polar(const BivarPoly& f_in, const BivarPoly& l_in) {
  require_singular_input(f_in);
  auto [f, l] = unify(f_in, l_in);
  const std::uint64_t p = f.field()->characteristic();
  PolarIdentityReport rep;
  rep.l = l;
  rep.polar = polar(f, l);
  rep.mu = milnor_number(f);
  const ResolutionTree own = branch_decompose(f);
  rep.mu_bar = 2 * own.delta + 1 - own.branches.size();
  rep.i0_f_l = i0(f, l);

  const bool polar_zero = rep.polar.is_zero();
  rep.i0_f_polar = polar_zero ? ExtNat::infinity() : i0(f, rep.polar);
  rep.i0_l_polar = polar_zero ? ExtNat::infinity() : i0(l, rep.polar);

  std::vector<BivarPoly> curves{f, l};
  if (!polar_zero) curves.push_back(rep.polar);
  const ResolutionTree tree = resolve_joint(curves);
  for (auto b : branches_of(tree, 0)) rep.i0_branches_l.push_back(tracked_branch_intersection(tree, 1, b));
  if (!polar_zero) {
    ExtNat sum = 0;
    for (auto b : branches_of(tree, 2)) {
      PolarFactor h;
      h.ord = tree.branches[b].path_mults.front();
      h.power = tree.branches[b].tracked_power[2];
      h.i0_f_h = tracked_branch_intersection(tree, 0, b);
      h.i0_l_h = tracked_branch_intersection(tree, 1, b);
      sum += h.i0_f_h.is_infinite() ? ExtNat::infinity() : ExtNat(h.i0_f_h.value() * h.power);
      rep.factors.push_back(h);
    }
    rep.factors_consistent = sum == rep.i0_f_polar;
  } else {
    rep.factors_consistent = true;
  }

  rep.dedekind_applicable = true;
  for (auto v : rep.i0_branches_l) rep.dedekind_applicable = rep.dedekind_applicable && nonzero_mod(v, p);
  rep.dedekind_holds = rep.i0_f_polar == minus_one(rep.mu_bar, rep.i0_f_l);

  if (rep.i0_f_l.is_finite() && rep.i0_l_polar.is_finite()) {
    rep.line_polar_bound = rep.i0_l_polar.value() + 1 >= rep.i0_f_l.value();
    rep.line_polar_equality = rep.i0_l_polar.value() + 1 == rep.i0_f_l.value();
  } else {
    rep.line_polar_bound = rep.i0_l_polar.is_infinite();
    rep.line_polar_equality = false;
  }

  rep.hypothesis_i = nonzero_mod(rep.i0_f_l, p);
  rep.hypothesis_ii = !polar_zero;
  rep.condition_iii = !polar_zero;
  for (std::size_t i = 0; i < rep.factors.size(); ++i) {
    const auto& h = rep.factors[i];
    rep.hypothesis_ii = rep.hypothesis_ii && nonzero_mod(h.i0_l_h, p);
    if (!nonzero_mod(h.i0_f_h, p)) {
      rep.condition_iii = false;
      rep.failing_factors.push_back("polar branch " + std::to_string(i) + " (ord " + std::to_string(h.ord) +
                                    "): i0(f,h) = " + h.i0_f_h.to_string());
    }
  }
  const ExtNat rhs = minus_one(rep.mu, rep.i0_f_l);
  rep.teissier_bound = rep.i0_f_polar <= rhs;
  rep.teissier_equality = rep.i0_f_polar == rhs;
  return rep;
}

PolarIdentityReport dedekind_polar_identity(const BivarPoly& f, const BivarPoly& l) {
  PolarIdentityReport rep = evaluate_polar(f, l);
  if (!rep.dedekind_applicable) {
    throw HypothesisFailedError("some branch f_i has i0(f_i, l) divisible by the characteristic", std::move(rep));
  }
  return rep;
}

PolarIdentityReport teissier_bound(const BivarPoly& f, const BivarPoly& l) {
  PolarIdentityReport rep = evaluate_polar(f, l);
  if (rep.mu.is_infinite()) throw HypothesisFailedError("Milnor number is infinite", std::move(rep));
  if (!rep.hypothesis_i && !rep.hypothesis_ii) {
    throw HypothesisFailedError("hypotheses (i) and (ii) fail", std::move(rep));
  }
  if (!rep.hypothesis_i) throw HypothesisFailedError("hypothesis (i) fails: i0(f, l) = 0 mod p", std::move(rep));
  if (!rep.hypothesis_ii) {
    throw HypothesisFailedError("hypothesis (ii) fails: some polar branch h has i0(l, h) = 0 mod p", std::move(rep));
  }
  return rep;
}

}  // namespace charplane
