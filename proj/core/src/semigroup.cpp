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

#include "charplane/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "charplane/error.hpp"

namespace charplane {

namespace {

// Membership table of the semigroup for 0..limit.
std::vector<char> members(const std::vector<std::uint64_t>& gens, std::uint64_t limit) {
  std::vector<char> in(limit + 1, 0);
  in[0] = 1;
  for (std::uint64_t v = 1; v <= limit; ++v) {
    for (auto g : gens) {
      if (g <= v && in[v - g]) {
        in[v] = 1;
        break;
      }
    }
  }
  return in;
}

std::uint64_t gcd_all(const std::vector<std::uint64_t>& gens) {
  std::uint64_t g = 0;
  for (auto v : gens) g = std::gcd(g, v);
  return g;
}

}  // namespace

std::vector<std::uint64_t> minimal_generators(std::vector<std::uint64_t> values) {
  std::erase(values, 0);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<std::uint64_t> gens;
  for (auto v : values) {
    if (!in_semigroup(gens, v)) gens.push_back(v);
  }
  return gens;
}

bool in_semigroup(const std::vector<std::uint64_t>& gens, std::uint64_t v) {
  if (v == 0) return true;
  if (gens.empty()) return false;
  return members(gens, v)[v] != 0;
}

std::uint64_t conductor_by_gaps(const std::vector<std::uint64_t>& gens) {
  if (gens.empty() || gcd_all(gens) != 1) raise(ErrorCode::Internal, "semigroup has finite complement only if gcd is 1");
  const std::uint64_t smallest = *std::min_element(gens.begin(), gens.end());
  if (smallest == 1) return 0;
  std::uint64_t limit = 4 * *std::max_element(gens.begin(), gens.end()) * smallest;
  while (true) {
    const auto in = members(gens, limit);
    std::uint64_t run = 0;
    for (std::uint64_t v = 0; v <= limit; ++v) {
      run = in[v] ? run + 1 : 0;
      if (run == smallest) return v + 1 - smallest;
    }
    limit *= 2;
  }
}

std::uint64_t gap_count(const std::vector<std::uint64_t>& gens) {
  const std::uint64_t c = conductor_by_gaps(gens);
  const auto in = members(gens, c);
  return static_cast<std::uint64_t>(std::count(in.begin(), in.end(), 0));
}

std::uint64_t conductor_closed_form(const std::vector<std::uint64_t>& gens) {
  if (gens.size() <= 1) return 0;
  std::uint64_t e_prev = gens[0];
  std::uint64_t total = 0;
  for (std::size_t k = 1; k < gens.size(); ++k) {
    const std::uint64_t e_k = std::gcd(e_prev, gens[k]);
    total += (e_prev / e_k - 1) * gens[k];
    e_prev = e_k;
  }
  return total + 1 - gens[0];
}

SemigroupData semigroup_from_generators(const std::vector<std::uint64_t>& values) {
  SemigroupData s;
  s.gens = minimal_generators(values);
  if (s.gens.empty()) raise(ErrorCode::Internal, "empty semigroup");
  std::uint64_t e = 0;
  for (std::size_t k = 0; k < s.gens.size(); ++k) {
    const std::uint64_t next = std::gcd(e, s.gens[k]);
    if (k > 0) s.n_seq.push_back(e / next);
    e = next;
    s.e.push_back(e);
  }
  s.n_star = s.n_seq.empty() ? 1 : *std::max_element(s.n_seq.begin(), s.n_seq.end());
  s.conductor = conductor_by_gaps(s.gens);
  s.conductor_closed_form = conductor_closed_form(s.gens);
  s.gap_count = gap_count(s.gens);
  return s;
}

}  // namespace charplane
