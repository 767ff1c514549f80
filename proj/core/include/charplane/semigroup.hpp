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

#ifndef CHARPLANE_SEMIGROUP_HPP
#define CHARPLANE_SEMIGROUP_HPP

#include <cstdint>
#include <vector>

namespace charplane {

/// Numerical semigroup data of a plane branch.
struct SemigroupData {
  std::vector<std::uint64_t> gens;   ///< minimal generators, increasing
  std::vector<std::uint64_t> e;      ///< e_k = gcd(gens[0..k])
  std::vector<std::uint64_t> n_seq;  ///< n_k = e_{k-1} / e_k, k >= 1
  std::uint64_t n_star = 1;          ///< max n_k (1 for a smooth branch)
  std::uint64_t conductor = 0;       ///< by gap enumeration
  std::uint64_t conductor_closed_form = 0;
  std::uint64_t gap_count = 0;
};

/// Minimal generating set of the semigroup generated by `values` (zeros ignored).
std::vector<std::uint64_t> minimal_generators(std::vector<std::uint64_t> values);

bool in_semigroup(const std::vector<std::uint64_t>& gens, std::uint64_t v);

/// Smallest c with c + N contained in the semigroup; requires gcd(gens) = 1.
std::uint64_t conductor_by_gaps(const std::vector<std::uint64_t>& gens);
std::uint64_t gap_count(const std::vector<std::uint64_t>& gens);

/// sum_k (n_k - 1) gens[k] - gens[0] + 1, or 0 for the smooth case.
std::uint64_t conductor_closed_form(const std::vector<std::uint64_t>& gens);

SemigroupData semigroup_from_generators(const std::vector<std::uint64_t>& values);

}  // namespace charplane

#endif  // CHARPLANE_SEMIGROUP_HPP
