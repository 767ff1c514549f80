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

#ifndef CHARPLANE_INVARIANTS_HPP
#define CHARPLANE_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "charplane/error.hpp"
#include "charplane/extnat.hpp"
#include "charplane/poly.hpp"
#include "charplane/resolve.hpp"

namespace charplane {

enum class Tristate { False, True, Indeterminate };

std::string_view to_string(Tristate t) noexcept;

struct SingularityReport {
  std::uint64_t ord = 0;
  ExtNat mu;
  std::uint64_t delta = 0;
  std::uint64_t r = 0;
  std::uint64_t c = 0;
  std::uint64_t mu_bar = 0;
  Tristate milnor_formula_holds = Tristate::Indeterminate;
  std::vector<BranchData> per_branch;
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> pairwise;
  unsigned field_degree = 1;
};

/// One branch h of the polar curve.
struct PolarFactor {
  std::uint64_t ord = 0;
  std::uint64_t power = 1;  ///< exponent of h in P_l(f)
  ExtNat i0_f_h;
  ExtNat i0_l_h;
};

struct PolarIdentityReport {
  BivarPoly l;
  BivarPoly polar;
  ExtNat mu;
  std::uint64_t mu_bar = 0;
  ExtNat i0_f_l;
  ExtNat i0_f_polar;
  ExtNat i0_l_polar;
  std::vector<ExtNat> i0_branches_l;  ///< i0(f_i, l) per branch of f
  std::vector<PolarFactor> factors;

  bool dedekind_applicable = false;  ///< every i0(f_i, l) is nonzero mod p
  bool dedekind_holds = false;       ///< i0(f, P) = mu_bar + i0(f, l) - 1
  bool line_polar_bound = false;        ///< i0(l, P) >= i0(f, l) - 1
  bool line_polar_equality = false;     ///< i0(l, P) = i0(f, l) - 1
  bool hypothesis_i = false;         ///< i0(f, l) nonzero mod p
  bool hypothesis_ii = false;        ///< every i0(l, h) nonzero mod p
  bool condition_iii = false;        ///< every i0(f, h) nonzero mod p
  bool teissier_bound = false;       ///< i0(f, P) <= mu + i0(f, l) - 1
  bool teissier_equality = false;    ///< i0(f, P) = mu + i0(f, l) - 1
  bool factors_consistent = false;   ///< sum over polar branches matches i0(f, P)
  std::vector<std::string> failing_factors;
};

/// Raised when a polar identity is requested outside its hypotheses; still carries the numbers.
class HypothesisFailedError : public Error {
 public:
  HypothesisFailedError(const std::string& what, PolarIdentityReport report);
  const PolarIdentityReport& report() const noexcept { return report_; }

 private:
  PolarIdentityReport report_;
};

/// True when v is finite and not divisible by p (p = 0: finite).
bool nonzero_mod(ExtNat v, std::uint64_t p);

ExtNat milnor_number(const BivarPoly& f);
std::uint64_t mu_bar(const BivarPoly& f);
SingularityReport invariant_report(const BivarPoly& f);
SingularityReport invariant_report(const BivarPoly& f, const ResolutionTree& tree);

/// First of y, y + x, y + 2x, ..., x with i0(f, l) = ord(f) and l not dividing f.
BivarPoly generic_transversal(const BivarPoly& f);

/// All polar numbers without hypothesis checks.
PolarIdentityReport evaluate_polar(const BivarPoly& f, const BivarPoly& l);
/// Throws HypothesisFailedError when some i0(f_i, l) is divisible by p.
PolarIdentityReport dedekind_polar_identity(const BivarPoly& f, const BivarPoly& l);
/// Throws HypothesisFailedError when hypothesis (i) or (ii) fails, or mu is infinite.
PolarIdentityReport teissier_bound(const BivarPoly& f, const BivarPoly& l);

}  // namespace charplane

#endif  // CHARPLANE_INVARIANTS_HPP
