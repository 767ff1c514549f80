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

#ifndef CHARPLANE_NEWTON_HPP
#define CHARPLANE_NEWTON_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "charplane/poly.hpp"

namespace charplane {

struct NewtonVertex {
  std::uint32_t i = 0;  ///< exponent of x
  std::uint32_t j = 0;  ///< exponent of y
};

/// A compact edge of the Newton diagram; `weight` is primitive and constant along it.
struct NewtonEdge {
  NewtonVertex from;  ///< the end with smaller x exponent
  NewtonVertex to;
  Weight weight;
};

struct NewtonDiagram {
  std::vector<NewtonVertex> vertices;  ///< ordered by increasing x exponent
  std::vector<NewtonEdge> edges;
};

NewtonDiagram newton_diagram(const BivarPoly& f);

/// Terms of f lying on the edge.
BivarPoly edge_form(const BivarPoly& f, const NewtonEdge& e);

/// The weight of the only compact edge, if the diagram has exactly one.
std::optional<Weight> single_edge_weight(const BivarPoly& f);

/// Largest monomial x^a y^b dividing f, and the cofactor.
std::pair<NewtonVertex, BivarPoly> split_monomial(const BivarPoly& f);

/// No repeated factor (monomial factors included).
bool is_squarefree(const BivarPoly& f);

/// For a weighted homogeneous form: the partials vanish together only at the origin.
bool only_trivial_critical_point(const BivarPoly& form);

/// For a weighted homogeneous form: no common zero of the partials with x y != 0.
bool no_torus_critical_point(const BivarPoly& form);

}  // namespace charplane

#endif  // CHARPLANE_NEWTON_HPP
