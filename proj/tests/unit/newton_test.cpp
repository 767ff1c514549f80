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


#include <gtest/gtest.h>

#include "charplane/newton.hpp"
#include "charplane/poly.hpp"

namespace charplane {
namespace {

Field field_for(std::uint64_t p) { return p == 0 ? FieldCtx::rationals() : FieldCtx::make(p, 1); }

TEST(Newton, SingleEdge) {
  const auto f = parse_poly("x^3+y^2+x^2*y^2", field_for(0));
  const NewtonDiagram d = newton_diagram(f);
  ASSERT_EQ(d.vertices.size(), 2u);
  EXPECT_EQ(d.vertices[0].i, 0u);
  EXPECT_EQ(d.vertices[0].j, 2u);
  EXPECT_EQ(d.vertices[1].i, 3u);
  ASSERT_EQ(d.edges.size(), 1u);
  EXPECT_EQ(d.edges[0].weight.n, 2u);
  EXPECT_EQ(d.edges[0].weight.m, 3u);
  EXPECT_EQ(edge_form(f, d.edges[0]), parse_poly("x^3+y^2", field_for(0)));
  const auto w = single_edge_weight(f);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->n, 2u);
}

TEST(Newton, TwoEdges) {
  const Field q = field_for(0);
  const auto f = parse_poly("y^4+x^2*y+x^7", q);
  const NewtonDiagram d = newton_diagram(f);
  ASSERT_EQ(d.edges.size(), 2u);
  EXPECT_EQ(edge_form(f, d.edges[0]), parse_poly("y^4+x^2*y", q));
  EXPECT_EQ(edge_form(f, d.edges[1]), parse_poly("x^2*y+x^7", q));
  EXPECT_FALSE(single_edge_weight(f).has_value());
}

TEST(Newton, NonConvenientDiagram) {
  const Field q = field_for(0);
  const auto f = parse_poly("x*y+y^3", q);
  const NewtonDiagram d = newton_diagram(f);
  ASSERT_EQ(d.vertices.size(), 2u);
  EXPECT_EQ(d.vertices[1].i, 1u);
  EXPECT_EQ(d.vertices[1].j, 1u);
}

TEST(Newton, SplitMonomial) {
  const Field q = field_for(0);
  const auto [v, rest] = split_monomial(parse_poly("x^2*y*(x+y^3)", q));
  EXPECT_EQ(v.i, 2u);
  EXPECT_EQ(v.j, 1u);
  EXPECT_EQ(rest, parse_poly("x+y^3", q));
}

TEST(Newton, Squarefree) {
  EXPECT_TRUE(is_squarefree(parse_poly("x^2+y^2", field_for(5))));
  EXPECT_FALSE(is_squarefree(parse_poly("x^2+2*x*y+y^2", field_for(5))));
  EXPECT_FALSE(is_squarefree(parse_poly("x^2*y", field_for(0))));
  EXPECT_FALSE(is_squarefree(parse_poly("x^5+y^5", field_for(5))));
}

TEST(Newton, CriticalPoints) {
  EXPECT_TRUE(only_trivial_critical_point(parse_poly("x^3+y^2", field_for(0))));
  EXPECT_FALSE(only_trivial_critical_point(parse_poly("x^3+y^2", field_for(3))));
  EXPECT_FALSE(only_trivial_critical_point(parse_poly("x^3+y^2", field_for(2))));
  EXPECT_TRUE(only_trivial_critical_point(parse_poly("x^3+y^2", field_for(5))));
  // x^2 y: the partials vanish on the y-axis, which lies off the torus.
  EXPECT_FALSE(only_trivial_critical_point(parse_poly("x^2*y", field_for(0))));
  EXPECT_TRUE(no_torus_critical_point(parse_poly("x^2*y", field_for(0))));
  EXPECT_FALSE(no_torus_critical_point(parse_poly("(x+y)^2", field_for(0))));
}

}  // namespace
}  // namespace charplane
