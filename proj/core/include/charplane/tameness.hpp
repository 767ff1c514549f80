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

#ifndef CHARPLANE_TAMENESS_HPP
#define CHARPLANE_TAMENESS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "charplane/invariants.hpp"
#include "charplane/poly.hpp"

namespace charplane {

enum class Verdict { False, True, Unknown };
/// How a criterion relates to tameness when it applies.
enum class CriterionKind { Direct, Equivalence, Sufficient };

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(CriterionKind k) noexcept;

struct CriterionResult {
  std::string name;
  CriterionKind kind = CriterionKind::Sufficient;
  bool applicable = false;
  Verdict verdict = Verdict::Unknown;
  std::string witness;
};

struct MerleFactor {
  std::uint64_t ord = 0;
  std::uint64_t power = 1;  ///< exponent in the polar
  ExtNat i0_f_h;
  mpq_class ratio;          ///< i0(f, h) / ord(h)
  std::size_t bundle = 0;   ///< k in 1..g, 0 when no bundle matches
  bool ord_divisibility_ok = false;
};

struct MerleBundle {
  std::size_t k = 0;
  std::uint64_t ord_h = 0;
  std::uint64_t expected_ord = 0;
  mpq_class expected_ratio;
  std::vector<mpq_class> contact_ratios;
  bool ord_ok = false;
  bool ord_divisibility_ok = false;
};

struct MerleReport {
  std::uint64_t n = 0;
  bool swapped = false;  ///< coordinates exchanged so that ord f(0, y) = n
  std::vector<std::uint64_t> gens;
  std::vector<std::uint64_t> e;
  std::vector<MerleFactor> factors;
  std::vector<MerleBundle> bundles;
  std::uint64_t total_ord = 0;  ///< sum of ord(h_k), expected n - 1
  std::vector<std::string> violations;
};

struct TamenessOptions {
  std::optional<Weight> weight;
  std::optional<BivarPoly> line;
};

struct TamenessReport {
  SingularityReport invariants;
  CriterionResult direct;
  std::vector<CriterionResult> criteria;
  std::optional<PolarIdentityReport> polar;
  std::optional<MerleReport> merle;
  bool consistent = true;
  std::vector<std::string> inconsistencies;
};

CriterionResult tame_direct(const BivarPoly& f);
CriterionResult tame_direct(const SingularityReport& rep);
/// Default weight: the only Newton edge weight if there is one, otherwise (1, 1).
CriterionResult sqh_test(const BivarPoly& f, std::optional<Weight> w = std::nullopt);
CriterionResult newton_nondegenerate_test(const BivarPoly& f);
/// NGUYEN_MU_BOUND, KAPPA_BOUND and POLAR_FACTORS (the p > ord(f) equivalence).
std::vector<CriterionResult> nguyen_criteria(const BivarPoly& f, const std::optional<BivarPoly>& l = std::nullopt);
std::vector<CriterionResult> nguyen_criteria(const BivarPoly& f, const SingularityReport& rep,
                                             const PolarIdentityReport& polar);
/// Throws NotIrreducible for reducible f.
CriterionResult semigroup_criterion(const BivarPoly& f);
CriterionResult semigroup_criterion(const SingularityReport& rep, std::uint64_t p);
/// Throws NotIrreducible / HypothesisFailed.
MerleReport merle_verify(const BivarPoly& f);
CriterionResult merle_criterion(const BivarPoly& f, const SingularityReport& rep, MerleReport* out = nullptr);

/// Runs every criterion side by side and cross-checks them against DIRECT.
TamenessReport evaluate_tameness(const BivarPoly& f, const TamenessOptions& options = {});

}  // namespace charplane

#endif  // CHARPLANE_TAMENESS_HPP
