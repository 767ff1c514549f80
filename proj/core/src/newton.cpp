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

#include "charplane/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "charplane/error.hpp"

namespace charplane {

NewtonDiagram newton_diagram(const BivarPoly& f) {
  if (f.is_zero()) raise(ErrorCode::ZeroInput, "Newton diagram of zero");
  std::map<std::uint32_t, std::uint32_t> lowest;
  for (const auto& [e, c] : f.terms()) {
    auto it = lowest.find(e.x);
    if (it == lowest.end() || e.y < it->second) lowest[e.x] = e.y;
  }
  std::vector<NewtonVertex> pts;
  for (const auto& [i, j] : lowest) pts.push_back({i, j});

  // Lower convex hull (monotone chain), then keep the part with decreasing y.
  auto cross = [](const NewtonVertex& o, const NewtonVertex& a, const NewtonVertex& b) {
    return (static_cast<std::int64_t>(a.i) - o.i) * (static_cast<std::int64_t>(b.j) - o.j) -
           (static_cast<std::int64_t>(a.j) - o.j) * (static_cast<std::int64_t>(b.i) - o.i);
  };
  std::vector<NewtonVertex> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  NewtonDiagram d;
  for (const auto& v : hull) {
    d.vertices.push_back(v);
    if (d.vertices.size() >= 2 && v.j >= d.vertices[d.vertices.size() - 2].j) {
      d.vertices.pop_back();
      break;
    }
  }
  for (std::size_t k = 0; k + 1 < d.vertices.size(); ++k) {
    const auto& a = d.vertices[k];
    const auto& b = d.vertices[k + 1];
    const std::uint64_t di = b.i - a.i, dj = a.j - b.j;
    const std::uint64_t g = std::gcd(di, dj);
    d.edges.push_back({a, b, Weight{dj / g, di / g}});
  }
  return d;
}

BivarPoly edge_form(const BivarPoly& f, const NewtonEdge& e) {
  const std::uint64_t level = e.from.i * e.weight.n + e.from.j * e.weight.m;
  BivarPoly r(f.field());
  for (const auto& [x, c] : f.terms()) {
    if (x.x * e.weight.n + x.y * e.weight.m == level) r += BivarPoly::monomial(c, x.x, x.y);
  }
  return r;
}

std::optional<Weight> single_edge_weight(const BivarPoly& f) {
  const NewtonDiagram d = newton_diagram(f);
  if (d.edges.size() != 1) return std::nullopt;
  return d.edges.front().weight;
}

std::pair<NewtonVertex, BivarPoly> split_monomial(const BivarPoly& f) {
  if (f.is_zero()) raise(ErrorCode::ZeroInput, "monomial part of zero");
  NewtonVertex v{UINT32_MAX, UINT32_MAX};
  for (const auto& [e, c] : f.terms()) {
    v.i = std::min(v.i, e.x);
    v.j = std::min(v.j, e.y);
  }
  return {v, f.div_monomial(v.i, v.j)};
}

bool is_squarefree(const BivarPoly& f) {
  if (f.is_zero()) raise(ErrorCode::ZeroInput, "squarefreeness of zero");
  if (f.is_constant()) return true;
  return exact_div(f, radical(f)).is_constant();
}

bool only_trivial_critical_point(const BivarPoly& form) {
  const BivarPoly a = form.dx(), b = form.dy();
  if (a.is_zero() && b.is_zero()) return false;
  if (a.is_zero()) return b.is_constant();
  if (b.is_zero()) return a.is_constant();
  return gcd(a, b).is_constant();
}

bool no_torus_critical_point(const BivarPoly& form) {
  const BivarPoly a = form.dx(), b = form.dy();
  if (a.is_zero() && b.is_zero()) return false;
  if (a.is_zero()) return split_monomial(b).second.is_constant();
  if (b.is_zero()) return split_monomial(a).second.is_constant();
  return split_monomial(gcd(split_monomial(a).second, split_monomial(b).second)).second.is_constant();
}

}  // namespace charplane
