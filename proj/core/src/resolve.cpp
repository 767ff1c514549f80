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

#include "charplane/resolve.hpp"

#include <algorithm>
#include <string>

#include "charplane/error.hpp"

namespace charplane {

namespace {

struct Work {
  std::size_t node;
  BivarPoly main;
  std::vector<BivarPoly> tracked;
};

std::uint64_t ord(const BivarPoly& f) { return f.is_zero() ? 0 : static_cast<std::uint64_t>(f.order()); }

// Strict transform in the chart through direction (1 : t).
BivarPoly chart_affine(const BivarPoly& f, const Scalar& t, std::uint64_t m) {
  const Field& k = f.field();
  BivarPoly h = f;
  if (!t.is_zero()) h = f.compose(BivarPoly::x(k), BivarPoly::linear(t, Scalar::one(k), Scalar::zero(k)));
  BivarPoly r(k);
  for (const auto& [e, c] : h.terms()) {
    r += BivarPoly::monomial(c, static_cast<std::uint32_t>(e.x + e.y - m), e.y);
  }
  return r;
}

// Strict transform in the chart through direction (0 : 1).
BivarPoly chart_infinity(const BivarPoly& f, std::uint64_t m) {
  BivarPoly r(f.field());
  for (const auto& [e, c] : f.terms()) {
    r += BivarPoly::monomial(c, e.x, static_cast<std::uint32_t>(e.x + e.y - m));
  }
  return r;
}

BivarPoly transform(const BivarPoly& f, const InfinitelyNearPoint& child) {
  const std::uint64_t m = ord(f);
  if (m == 0) return BivarPoly::constant(Scalar::one(f.field()));
  return child.chart == Chart::Affine ? chart_affine(f, child.center, m) : chart_infinity(f, m);
}

bool separates(const InfinitelyNearPoint& q, const BivarPoly& f) {
  if (q.multiplicity != 1 || q.satellite()) return false;
  if (q.x_divisor) return !f.coeff(0, 1).is_zero();
  if (q.y_divisor) return !f.coeff(1, 0).is_zero();
  return true;
}

// Multiplicities along a chain of points ending with multiplicity one at `last`.
std::vector<std::uint64_t> proximity_multiplicities(const ResolutionTree& tree, const std::vector<std::size_t>& path,
                                                    std::size_t last) {
  std::vector<std::uint64_t> m(last + 1, 0);
  m[last] = 1;
  for (std::size_t i = last; i-- > 0;) {
    std::uint64_t s = 0;
    for (std::size_t j = i + 1; j <= last; ++j) {
      if (tree.points[path[j]].proximate_to(path[i])) s += m[j];
    }
    m[i] = s;
  }
  return m;
}

void fill_branch(ResolutionTree& tree, BranchData& b) {
  const std::size_t n = b.path.size() - 1;
  b.path_mults = proximity_multiplicities(tree, b.path, n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (b.path_mults[i] == 0) raise(ErrorCode::Internal, "branch has multiplicity zero at one of its points");
    tree.points[b.path[i]].branch_multiplicity[b.id] = b.path_mults[i];
  }

  std::size_t keep = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (b.path_mults[i] >= 2 || tree.points[b.path[i]].satellite()) keep = i;
  }
  b.mult_seq.assign(b.path_mults.begin(), b.path_mults.begin() + static_cast<std::ptrdiff_t>(keep) + 1);

  std::vector<std::uint64_t> values;
  std::uint64_t last_value = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    const auto xi = proximity_multiplicities(tree, b.path, i);
    std::uint64_t v = 0;
    for (std::size_t j = 0; j <= i; ++j) v += b.path_mults[j] * xi[j];
    values.push_back(v);
    last_value = v;
  }
  for (std::uint64_t k = 1; k <= b.path_mults[0]; ++k) values.push_back(last_value + k);

  const SemigroupData s = semigroup_from_generators(values);
  b.gens = s.gens;
  b.e = s.e;
  b.n_seq = s.n_seq;
  b.n_star = s.n_star;
  b.conductor = s.conductor;
  b.conductor_closed_form = s.conductor_closed_form;
  b.gap_count = s.gap_count;
  b.delta_branch = 0;
  for (auto m : b.path_mults) b.delta_branch += m * (m - 1) / 2;

  if (b.gens.front() != b.path_mults.front()) {
    raise(ErrorCode::Internal, "branch multiplicity differs from the smallest semigroup generator");
  }
  if (b.conductor != b.conductor_closed_form || b.conductor != 2 * b.delta_branch || b.gap_count != b.delta_branch) {
    raise(ErrorCode::Internal, "semigroup of branch " + std::to_string(b.id) + " fails the conductor cross-checks");
  }
}

ResolutionTree resolve_core(BivarPoly main, std::vector<BivarPoly> tracked) {
  ResolutionTree tree;
  tree.tracked_count = tracked.size();
  tree.max_field_degree = main.field()->degree();
  if (main.is_unit()) return tree;
  const auto deg = static_cast<std::uint64_t>(std::max(1, main.total_degree()));
  const std::uint64_t guard = 4 * deg * deg;

  InfinitelyNearPoint root;
  root.field = main.field();
  tree.points.push_back(root);
  std::vector<Work> stack;
  stack.push_back({0, std::move(main), std::move(tracked)});

  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();
    {
      InfinitelyNearPoint& q = tree.points[w.node];
      q.multiplicity = ord(w.main);
      q.tracked.clear();
      for (auto& t : w.tracked) {
        q.tracked.push_back(ord(t));
        if (ord(t) == 0) t = BivarPoly::constant(Scalar::one(t.field()));
      }
      if (q.multiplicity == 0) raise(ErrorCode::Internal, "blowup center off the curve");
      if (separates(q, w.main)) {
        q.leaf = true;
        BranchData b;
        b.id = tree.branches.size();
        for (std::optional<std::size_t> at = w.node; at; at = tree.points[*at].parent) b.path.push_back(*at);
        std::reverse(b.path.begin(), b.path.end());
        b.tracked_power = q.tracked;
        tree.branches.push_back(std::move(b));
        continue;
      }
      if (q.depth >= guard) {
        raise(ErrorCode::DepthExceeded, "blowup depth exceeded " + std::to_string(guard));
      }
    }

    const std::uint64_t m = tree.points[w.node].multiplicity;
    const BivarPoly in = w.main.initial_form();
    std::vector<Scalar> cone;
    for (std::uint64_t i = 0; i <= m; ++i) {
      cone.push_back(in.coeff(static_cast<std::uint32_t>(m - i), static_cast<std::uint32_t>(i)));
    }
    const UPoly u(w.main.field(), cone);
    const bool at_infinity = cone.back().is_zero();

    std::vector<InfinitelyNearPoint> kids;
    Field k = w.main.field();
    if (u.degree() >= 1) {
      RootSet rs = roots_in_splitting_field(u);
      k = rs.field;
      for (const auto& r : rs.roots) {
        InfinitelyNearPoint c;
        c.chart = Chart::Affine;
        c.center = r.value;
        kids.push_back(std::move(c));
      }
    }
    if (at_infinity) {
      InfinitelyNearPoint c;
      c.chart = Chart::Infinity;
      kids.push_back(std::move(c));
    }
    if (!same_field(k, w.main.field())) {
      w.main = w.main.embed(k);
      for (auto& t : w.tracked) t = t.embed(k);
      tree.max_field_degree = std::max(tree.max_field_degree, k->degree());
    }

    std::vector<Work> pending;
    for (auto& c : kids) {
      const InfinitelyNearPoint& parent = tree.points[w.node];
      c.id = tree.points.size();
      c.parent = w.node;
      c.depth = parent.depth + 1;
      c.field = k;
      if (c.chart == Chart::Affine) {
        c.x_divisor = w.node;
        if (c.center.is_zero()) c.y_divisor = parent.y_divisor;
      } else {
        c.y_divisor = w.node;
        c.x_divisor = parent.x_divisor;
      }
      Work child{c.id, transform(w.main, c), {}};
      for (const auto& t : w.tracked) child.tracked.push_back(transform(t, c));
      tree.points[w.node].children.push_back(c.id);
      tree.points.push_back(std::move(c));
      pending.push_back(std::move(child));
    }
    for (auto it = pending.rbegin(); it != pending.rend(); ++it) stack.push_back(std::move(*it));
  }

  for (auto& b : tree.branches) fill_branch(tree, b);

  for (const auto& q : tree.points) {
    std::uint64_t s = 0;
    for (const auto& [id, m] : q.branch_multiplicity) s += m;
    if (s != q.multiplicity) {
      raise(ErrorCode::Internal, "branch multiplicities do not add up at point " + std::to_string(q.id));
    }
    tree.delta += q.multiplicity * (q.multiplicity - 1) / 2;
  }
  std::uint64_t check = 0;
  for (std::size_t i = 0; i < tree.branches.size(); ++i) {
    check += tree.branches[i].delta_branch;
    for (std::size_t j = i + 1; j < tree.branches.size(); ++j) {
      const auto& a = tree.branches[i];
      const auto& b = tree.branches[j];
      std::uint64_t v = 0;
      for (std::size_t s = 0; s < a.path.size() && s < b.path.size() && a.path[s] == b.path[s]; ++s) {
        v += a.path_mults[s] * b.path_mults[s];
      }
      tree.pairwise[{i, j}] = v;
      check += v;
    }
  }
  if (check != tree.delta) raise(ErrorCode::Internal, "delta from blowups disagrees with the branch decomposition");
  return tree;
}

BivarPoly lcm_radical(const std::vector<BivarPoly>& curves) {
  BivarPoly acc = BivarPoly::constant(Scalar::one(curves.front().field()));
  for (const auto& c : curves) {
    const BivarPoly r = radical(c);
    acc = (acc * exact_div(r, gcd(acc, r))).monic();
  }
  return acc;
}

}  // namespace

ResolutionTree branch_decompose(const BivarPoly& f) {
  if (f.is_zero()) raise(ErrorCode::ZeroInput, "cannot resolve the zero polynomial");
  if (f.is_unit()) return resolve_core(f, {});
  if (!reduced_test(f).reduced) raise(ErrorCode::NotReduced, f.to_string() + " has a repeated factor through the origin");
  return resolve_core(f, {f});
}

ResolutionTree resolve_joint(const std::vector<BivarPoly>& curves_in) {
  if (curves_in.empty()) raise(ErrorCode::ZeroInput, "no curves to resolve");
  Field k = curves_in.front().field();
  for (const auto& c : curves_in) {
    if (c.is_zero()) raise(ErrorCode::ZeroInput, "cannot resolve the zero polynomial");
    k = common_field(k, c.field());
  }
  std::vector<BivarPoly> curves;
  for (const auto& c : curves_in) curves.push_back(c.embed(k));
  return resolve_core(lcm_radical(curves), curves);
}

DeltaConductor delta_and_conductor(const ResolutionTree& tree) {
  return {tree.delta, tree.branches.size(), 2 * tree.delta};
}

const std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>& pairwise_intersections(const ResolutionTree& tree) {
  return tree.pairwise;
}

ExtNat tracked_branch_intersection(const ResolutionTree& tree, std::size_t curve, std::size_t branch) {
  const BranchData& b = tree.branches.at(branch);
  if (b.tracked_power.at(curve) > 0) return ExtNat::infinity();
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < b.path.size(); ++i) v += tree.points[b.path[i]].tracked.at(curve) * b.path_mults[i];
  return v;
}

ExtNat tracked_intersection(const ResolutionTree& tree, std::size_t first, std::size_t second) {
  ExtNat total = 0;
  for (const auto& b : tree.branches) {
    const std::uint64_t power = b.tracked_power.at(second);
    if (power == 0) continue;
    const ExtNat v = tracked_branch_intersection(tree, first, b.id);
    if (v.is_infinite()) return v;
    total += v.value() * power;
  }
  return total;
}

std::vector<std::size_t> branches_of(const ResolutionTree& tree, std::size_t curve) {
  std::vector<std::size_t> out;
  for (const auto& b : tree.branches) {
    if (b.tracked_power.at(curve) > 0) out.push_back(b.id);
  }
  return out;
}

}  // namespace charplane
