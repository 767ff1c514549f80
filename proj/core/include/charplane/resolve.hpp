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

#ifndef CHARPLANE_RESOLVE_HPP
#define CHARPLANE_RESOLVE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "charplane/extnat.hpp"
#include "charplane/poly.hpp"
#include "charplane/semigroup.hpp"

namespace charplane {

enum class Chart {
  Origin,    ///< the origin itself
  Affine,    ///< direction (1 : center), coordinates x = x', y = x'(y' + center)
  Infinity,  ///< direction (0 : 1), coordinates x = x'y', y = y'
};

struct InfinitelyNearPoint {
  std::size_t id = 0;
  std::optional<std::size_t> parent;
  std::uint32_t depth = 0;
  Chart chart = Chart::Origin;
  Scalar center;  ///< set for Chart::Affine
  Field field;
  std::uint64_t multiplicity = 0;        ///< of the resolved curve
  std::vector<std::uint64_t> tracked;    ///< multiplicity of each tracked curve
  std::optional<std::size_t> x_divisor;  ///< exceptional divisor through here as x = 0
  std::optional<std::size_t> y_divisor;  ///< exceptional divisor through here as y = 0
  std::vector<std::size_t> children;
  std::map<std::size_t, std::uint64_t> branch_multiplicity;  ///< branch id -> m_q(branch)
  bool leaf = false;

  /// True when this point lies on the exceptional divisor of `other`.
  bool proximate_to(std::size_t other) const { return x_divisor == other || y_divisor == other; }
  bool satellite() const { return x_divisor.has_value() && y_divisor.has_value(); }
};

struct BranchData {
  std::size_t id = 0;
  std::vector<std::uint64_t> mult_seq;  ///< truncated after the last satellite or non-simple point
  std::vector<std::uint64_t> gens;
  std::vector<std::uint64_t> e;
  std::vector<std::uint64_t> n_seq;
  std::uint64_t n_star = 1;
  std::uint64_t conductor = 0;
  std::uint64_t conductor_closed_form = 0;
  std::uint64_t delta_branch = 0;
  std::uint64_t gap_count = 0;
  std::vector<std::size_t> path;             ///< point ids from the origin to the separating leaf
  std::vector<std::uint64_t> path_mults;     ///< m_q(branch) along `path`
  std::vector<std::uint64_t> tracked_power;  ///< exponent of this branch in each tracked curve
};

struct ResolutionTree {
  std::vector<InfinitelyNearPoint> points;
  std::vector<BranchData> branches;
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> pairwise;
  std::size_t tracked_count = 0;
  std::uint64_t delta = 0;
  unsigned max_field_degree = 1;
};

/// Resolves a reduced f. Throws NotReduced / DepthExceeded.
ResolutionTree branch_decompose(const BivarPoly& f);

/// Resolves the reduced union of `curves` (each may be non-reduced or a unit at
/// the origin) and records the multiplicity of every curve at every point.
ResolutionTree resolve_joint(const std::vector<BivarPoly>& curves);

struct DeltaConductor {
  std::uint64_t delta = 0;
  std::uint64_t r = 0;
  std::uint64_t c = 0;
};

DeltaConductor delta_and_conductor(const ResolutionTree& tree);
const std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>& pairwise_intersections(const ResolutionTree& tree);

/// Noether's formula: i0(tracked curve, branch); infinite when the branch is a component.
ExtNat tracked_branch_intersection(const ResolutionTree& tree, std::size_t curve, std::size_t branch);
/// i0 of two tracked curves, summed over the branches of `second`.
ExtNat tracked_intersection(const ResolutionTree& tree, std::size_t first, std::size_t second);
/// Branch ids that are components of a tracked curve.
std::vector<std::size_t> branches_of(const ResolutionTree& tree, std::size_t curve);

}  // namespace charplane

#endif  // CHARPLANE_RESOLVE_HPP
