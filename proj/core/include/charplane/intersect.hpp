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

#ifndef CHARPLANE_INTERSECT_HPP
#define CHARPLANE_INTERSECT_HPP

#include <utility>

#include "charplane/extnat.hpp"
#include "charplane/poly.hpp"

namespace charplane {

/// Brings two polynomials over a common field (the smallest one containing both).
std::pair<BivarPoly, BivarPoly> unify(const BivarPoly& f, const BivarPoly& g);

/// Local intersection multiplicity at the origin: Fulton-style elimination on
/// representatives truncated modulo a power of the maximal ideal.
ExtNat i0(const BivarPoly& f, const BivarPoly& g);

/// Independent check: order in x of Res_y after a generic shear x -> x + c y.
/// Throws InfiniteIntersection on a common factor through the origin and
/// OracleFailure when no shear in the deterministic sequence works.
ExtNat i0_resultant_oracle(const BivarPoly& f, const BivarPoly& g);

/// Resultant with respect to y as a polynomial in x.
UPoly resultant_y(const BivarPoly& f, const BivarPoly& g);

}  // namespace charplane

#endif  // CHARPLANE_INTERSECT_HPP
