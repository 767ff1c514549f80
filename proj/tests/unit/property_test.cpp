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

#include "audit.hpp"
#include "charplane/charplane.hpp"
#include "generators.hpp"

namespace charplane {
namespace {

using testing::audit_gorenstein;
using testing::audit_oracles;
using testing::audit_properties;
using testing::audit_soundness;
using testing::field_for;
using testing::Generator;

class CorpusProperties : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  std::vector<testing::CorpusMember> corpus() const {
    return testing::make_corpus({GetParam()}, 8, testing::kCorpusSeed + 17);
  }
};

TEST_P(CorpusProperties, AuditsAreClean) {
  const std::uint64_t p = GetParam();
  const Field k = field_for(p);
  int evaluated = 0;
  for (const auto& m : corpus()) {
    const BivarPoly f = m.f.to_bivar(k);
    TamenessReport t;
    try {
      t = evaluate_tameness(f);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::NotSupported) << m.f.text();
      continue;
    }
    ++evaluated;
    for (const auto& v : audit_properties(m, f, t)) ADD_FAILURE() << m.f.text() << ": " << v;
    for (const auto& v : audit_oracles(m, k).discrepancies) ADD_FAILURE() << m.f.text() << ": " << v;
    for (const auto& v : audit_gorenstein(m, k, t)) ADD_FAILURE() << m.f.text() << ": " << v;
    for (const auto& v : audit_soundness(t, p)) ADD_FAILURE() << m.f.text() << ": " << v;
  }
  EXPECT_GE(evaluated, 6);
}

TEST_P(CorpusProperties, MuBarIgnoresUnits) {
  const std::uint64_t p = GetParam();
  const Field k = field_for(p);
  Generator gen(p + 91);
  for (const auto& m : corpus()) {
    const BivarPoly f = m.f.to_bivar(k);
    const BivarPoly u = gen.unit(p).to_bivar(k);
    try {
      EXPECT_EQ(mu_bar(u * f), mu_bar(f)) << m.f.text() << " unit " << u.to_string();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotSupported);
    }
  }
}

TEST_P(CorpusProperties, TeissierEqualityDetectsTameness) {
  const std::uint64_t p = GetParam();
  const Field k = field_for(p);
  for (const auto& m : corpus()) {
    const BivarPoly f = m.f.to_bivar(k);
    try {
      const PolarIdentityReport pr = evaluate_polar(f, generic_transversal(f));
      bool all_prime_to_p = true;
      for (const auto& v : pr.i0_branches_l) all_prime_to_p = all_prime_to_p && nonzero_mod(v, p);
      if (!all_prime_to_p) continue;
      const bool tame = tame_direct(f).verdict == Verdict::True;
      EXPECT_EQ(tame, pr.teissier_equality) << m.f.text();
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::NotSupported || e.code() == ErrorCode::HypothesisFailed) << m.f.text();
    }
  }
}

TEST_P(CorpusProperties, JacobianWeightedBound) {
  const std::uint64_t p = GetParam();
  const Field k = field_for(p);
  Generator gen(p + 57);
  int equalities = 0, checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const BivarPoly f = gen.random_poly(p, 2, 7, 4).to_bivar(k);
    if (f.is_zero()) continue;
    const auto [fx, fy] = partial_derivatives(f);
    if (fx.is_zero() || fy.is_zero()) continue;
    const ExtNat mu = i0(fx, fy);
    for (const Weight w : {Weight{1, 1}, Weight{2, 3}, Weight{3, 2}, Weight{1, 2}, Weight{3, 4}}) {
      const auto d = weighted_order_and_initial(f, w);
      if (d.w_order <= w.n || d.w_order <= w.m) continue;
      ++checked;
      const std::uint64_t bound = (d.w_order - w.n) * (d.w_order - w.m);
      const bool sqh = only_trivial_critical_point(d.initial);
      if (mu.is_infinite()) {
        EXPECT_FALSE(sqh) << f.to_string();
        continue;
      }
      EXPECT_GE(mu.value() * w.n * w.m, bound) << f.to_string();
      EXPECT_EQ(mu.value() * w.n * w.m == bound, sqh) << f.to_string() << " w = (" << w.n << "," << w.m << ")";
      if (sqh) ++equalities;
    }
  }
  EXPECT_GT(checked, 20);
  EXPECT_GT(equalities, 0);
}

INSTANTIATE_TEST_SUITE_P(Characteristics, CorpusProperties, ::testing::Values(0, 2, 3, 5, 7, 11));

TEST(CorpusGenerator, IsDeterministic) {
  const auto a = testing::make_corpus({0, 5}, 5);
  const auto b = testing::make_corpus({0, 5}, 5);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].f.text(), b[i].f.text());
}

TEST(CorpusGenerator, MembersAreReduced) {
  for (const auto& m : testing::make_corpus({0, 2, 3}, 6)) {
    const BivarPoly f = m.f.to_bivar(field_for(m.p));
    EXPECT_TRUE(reduced_test(f).reduced) << m.f.text();
    EXPECT_GE(f.order(), 1);
  }
}

}  // namespace
}  // namespace charplane
