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


#include <random>

#include <gtest/gtest.h>

#include "charplane/error.hpp"
#include "charplane/field.hpp"
#include "charplane/upoly.hpp"

namespace charplane {
namespace {

UPoly upoly(const Field& k, std::initializer_list<long> low_first) {
  std::vector<Scalar> c;
  for (long v : low_first) c.emplace_back(k, v);
  return UPoly(k, std::move(c));
}

std::vector<Scalar> all_elements(const Field& k) {
  std::vector<Scalar> out;
  const mpz_class q = k->order();
  for (mpz_class i = 0; i < q; ++i) out.push_back(Scalar::from_index(k, i));
  return out;
}

TEST(FieldMake, RationalsAndPrimeFields) {
  const Field q = FieldCtx::make(0, 1);
  EXPECT_EQ(q->characteristic(), 0u);
  EXPECT_EQ(q->degree(), 1u);
  EXPECT_TRUE(same_field(q, FieldCtx::rationals()));

  const Field f5 = FieldCtx::make(5, 1);
  EXPECT_EQ(f5->characteristic(), 5u);
  EXPECT_TRUE(f5->modulus().empty());
  EXPECT_EQ(f5->order(), 5);
}

TEST(FieldMake, CubicExtensionOfF2HasIrreducibleModulus) {
  const Field f8 = FieldCtx::make(2, 3);
  ASSERT_EQ(f8->modulus().size(), 4u);
  EXPECT_EQ(f8->modulus().back(), 1u);
  // A cubic over F_2 is irreducible iff it has no root in F_2.
  const Field f2 = FieldCtx::make(2, 1);
  std::vector<Scalar> c;
  for (auto v : f8->modulus()) c.emplace_back(f2, static_cast<long>(v));
  const UPoly m(f2, c);
  EXPECT_FALSE(m.eval(Scalar::zero(f2)).is_zero());
  EXPECT_FALSE(m.eval(Scalar::one(f2)).is_zero());
  // The generator is a root of the modulus inside F_8.
  Scalar acc = Scalar::zero(f8);
  const Scalar t = Scalar::generator(f8);
  for (std::size_t i = 0; i < c.size(); ++i) acc += Scalar(f8, static_cast<long>(f8->modulus()[i])) * t.pow(i);
  EXPECT_TRUE(acc.is_zero());
  EXPECT_EQ(all_elements(f8).size(), 8u);
}

TEST(FieldMake, RejectsBadInput) {
  try {
    FieldCtx::make(4, 1);
    FAIL() << "expected InvalidCharacteristic";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidCharacteristic);
  }
  try {
    FieldCtx::make(0, 2);
    FAIL() << "expected UnsupportedExtension";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedExtension);
  }
}

TEST(FieldMake, EqualityIsStructural) {
  EXPECT_TRUE(same_field(FieldCtx::make(3, 2), FieldCtx::make(3, 2)));
  EXPECT_FALSE(same_field(FieldCtx::make(3, 2), FieldCtx::make(3, 1)));
  EXPECT_FALSE(same_field(FieldCtx::make(3, 1), FieldCtx::make(5, 1)));
}

TEST(Roots, SplitQuadraticOverF5) {
  const Field k = FieldCtx::make(5, 1);
  const RootSet rs = roots_in_splitting_field(upoly(k, {-1, 0, 1}));
  EXPECT_TRUE(same_field(rs.field, k));
  ASSERT_EQ(rs.roots.size(), 2u);
  EXPECT_EQ(rs.roots[0].value, Scalar(k, 1L));
  EXPECT_EQ(rs.roots[1].value, Scalar(k, 4L));
  EXPECT_EQ(rs.roots[0].multiplicity, 1u);
  EXPECT_EQ(rs.roots[1].multiplicity, 1u);
}

TEST(Roots, QuadraticOverF3NeedsF9) {
  const Field k = FieldCtx::make(3, 1);
  const UPoly u = upoly(k, {1, 0, 1});
  const RootSet rs = roots_in_splitting_field(u);
  EXPECT_EQ(rs.field->degree(), 2u);
  ASSERT_EQ(rs.roots.size(), 2u);
  const UPoly big = embed(u, rs.field);
  std::vector<Scalar> brute;
  for (const auto& a : all_elements(rs.field)) {
    if (big.eval(a).is_zero()) brute.push_back(a);
  }
  ASSERT_EQ(brute.size(), 2u);
  for (const auto& r : rs.roots) {
    EXPECT_TRUE(r.value == brute[0] || r.value == brute[1]);
    EXPECT_EQ(r.multiplicity, 1u);
  }
}

TEST(Roots, RepeatedRoot) {
  const Field k = FieldCtx::make(7, 1);
  const RootSet rs = roots_in_splitting_field(upoly(k, {4, -4, 1}));
  ASSERT_EQ(rs.roots.size(), 1u);
  EXPECT_EQ(rs.roots[0].value, Scalar(k, 2L));
  EXPECT_EQ(rs.roots[0].multiplicity, 2u);
}

TEST(Roots, ZeroPolynomialIsRejected) {
  const Field k = FieldCtx::make(7, 1);
  try {
    roots_in_splitting_field(UPoly(k));
    FAIL() << "expected ZeroInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroInput);
  }
}

TEST(Roots, RationalAndQuadraticInCharacteristicZero) {
  const Field q = FieldCtx::rationals();
  const RootSet lin = roots_in_splitting_field(upoly(q, {-6, 1, 1}));
  ASSERT_EQ(lin.roots.size(), 2u);
  EXPECT_TRUE(same_field(lin.field, q));
  const RootSet quad = roots_in_splitting_field(upoly(q, {-2, 0, 1}));
  ASSERT_EQ(quad.roots.size(), 2u);
  EXPECT_EQ(quad.field->radicand(), 2);
  for (const auto& r : quad.roots) EXPECT_EQ(r.value * r.value, Scalar(quad.field, 2L));
  try {
    roots_in_splitting_field(upoly(q, {-2, 0, 0, 1}));
    FAIL() << "expected NotSupported";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSupported);
  }
}

class SmallFields : public ::testing::TestWithParam<std::pair<std::uint64_t, unsigned>> {};

TEST_P(SmallFields, InversesAndNegatives) {
  const Field k = FieldCtx::make(GetParam().first, GetParam().second);
  for (const auto& a : all_elements(k)) {
    EXPECT_TRUE((a + (-a)).is_zero());
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
  }
}

TEST_P(SmallFields, FrobeniusIsAdditive) {
  const Field k = FieldCtx::make(GetParam().first, GetParam().second);
  const auto elems = all_elements(k);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  const std::uint64_t p = k->characteristic();
  for (int i = 0; i < 50; ++i) {
    const Scalar& a = elems[pick(rng)];
    const Scalar& b = elems[pick(rng)];
    EXPECT_EQ((a + b).pow(p), a.pow(p) + b.pow(p));
    EXPECT_EQ(a.pow(p).pth_root(), a);
  }
}

TEST_P(SmallFields, RootsReconstructPolynomial) {
  const Field k = FieldCtx::make(GetParam().first, GetParam().second);
  std::mt19937_64 rng(11);
  const auto elems = all_elements(k);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Scalar> c;
    for (int i = 0; i < 4; ++i) c.push_back(elems[pick(rng)]);
    c.push_back(Scalar::one(k));
    const UPoly u(k, c);
    const RootSet rs = roots_in_splitting_field(u);
    const UPoly big = embed(u, rs.field);
    UPoly product = UPoly::constant(Scalar::one(rs.field));
    unsigned count = 0;
    for (const auto& r : rs.roots) {
      const UPoly lin(rs.field, {-r.value, Scalar::one(rs.field)});
      for (unsigned m = 0; m < r.multiplicity; ++m) product = product * lin;
      count += r.multiplicity;
    }
    EXPECT_EQ(count, 4u);
    EXPECT_EQ(product, big);
  }
}

TEST_P(SmallFields, EmbeddingIsAHomomorphism) {
  const Field k = FieldCtx::make(GetParam().first, GetParam().second);
  const Field big = FieldCtx::make(k->characteristic(), 2 * k->degree());
  const auto elems = all_elements(k);
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      EXPECT_EQ(embed(a + b, big), embed(a, big) + embed(b, big));
      EXPECT_EQ(embed(a * b, big), embed(a, big) * embed(b, big));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, SmallFields,
                         ::testing::Values(std::pair<std::uint64_t, unsigned>{2, 1}, std::pair<std::uint64_t, unsigned>{5, 1},
                                           std::pair<std::uint64_t, unsigned>{2, 3}, std::pair<std::uint64_t, unsigned>{3, 2},
                                           std::pair<std::uint64_t, unsigned>{7, 2}));

TEST(Rationals, CanonicalForm) {
  const Field q = FieldCtx::rationals();
  const Scalar a(q, mpq_class(6, 4));
  EXPECT_EQ(a.rationals()[0], mpq_class(3, 2));
  EXPECT_EQ(a.to_string(), "3/2");
  EXPECT_TRUE((a * a.inverse()).is_one());
}

}  // namespace
}  // namespace charplane
