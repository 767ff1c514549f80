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

#ifndef CHARPLANE_TESTS_SUPPORT_GENERATORS_HPP
#define CHARPLANE_TESTS_SUPPORT_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "int_poly.hpp"

namespace charplane::testing {

inline constexpr std::uint64_t kCorpusSeed = 0x5eed2026;

/// A reduced polynomial built as a product of pairwise coprime pieces.
struct CorpusMember {
  std::uint64_t p = 0;
  IntPoly f;
  std::vector<IntPoly> pieces;
  std::string label;
};

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  /// Nonzero coefficient, reduced into [1, p-1] in characteristic p.
  long coefficient(std::uint64_t p, long magnitude = 5);
  int uniform(int lo, int hi);

  /// One piece: line, smooth arc, (y^a - c x^b) + higher terms, or a two-pair
  /// branch shaped like (y^2 - c x^3)^2 + d x^5 y; random shear and swap.
  IntPoly piece(std::uint64_t p);
  /// Up to `terms` random monomials of total degree in [min_order, max_degree].
  IntPoly random_poly(std::uint64_t p, int min_order, int max_degree, int terms);
  /// 1 + random terms of positive order.
  IntPoly unit(std::uint64_t p);
  /// Random weighted-homogeneous squarefree form times a tail of higher
  /// weight; w = (n, m) weighs x by n and y by m.
  IntPoly squarefree_initial_form(std::uint64_t p, std::uint64_t n, std::uint64_t m, std::uint64_t* w_order);
  /// Convenient f whose Newton faces are x^a + c y^b pieces with p not dividing a, b.
  IntPoly newton_nondegenerate(std::uint64_t p);

 private:
  std::mt19937_64 rng_;
};

/// `per_prime` members for each characteristic; members whose product is not
/// reduced are redrawn. Deterministic for a fixed seed.
std::vector<CorpusMember> make_corpus(const std::vector<std::uint64_t>& primes, std::size_t per_prime,
                                      std::uint64_t seed = kCorpusSeed, int max_pieces = 3);

}  // namespace charplane::testing

#endif  // CHARPLANE_TESTS_SUPPORT_GENERATORS_HPP
