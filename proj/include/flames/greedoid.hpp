// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// The greedoid layer. The edge sets of flame subgraphs of a rooted digraph
// form a greedoid: any flame below its maximum size can be grown by a single
// edge entering the largest tight set of a deficit vertex, and the grown
// edge is a coloop of the gammoid at its head. fractional_augment is the
// capacity analogue with an explicit epsilon.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flames/digraph.hpp"
#include "flames/errors.hpp"
#include "flames/flame.hpp"
#include "flames/flow.hpp"
#include "flames/rational.hpp"

namespace flames {

/// A certified single-step augmentation: the edge to add, the epsilon to add
/// it with (fractional mode only), and the tight-set witness at the deficit
/// vertex.
struct AugmentationStep {
  EdgeId edge;
  std::optional<Rat> epsilon;
  TightSet tight_set;
  VertexId deficit_vertex;
};

namespace detail {

inline bool is_zero_one(const CapacityVector& c) {
  for (const auto& [e, v] : c.entries())
    if (v != 1) return false;
  return true;
}

}  // namespace detail

/// Lemma-of-the-key-kind construction: H a flame below D (both as 0/1
/// vectors) with lambda_H(u) < lambda_D(u). Returns the lowest-id D-edge
/// entering the subset-largest tight set of u in H that is absent from H.
/// Adding it keeps H a flame and is a coloop of the gammoid at its head.
inline AugmentationStep find_augmenting_edge(const RootedDigraph& g,
                                             const CapacityVector& c_d,
                                             const CapacityVector& h, VertexId u) {
  if (u == g.root()) throw input_error("deficit vertex must differ from the root");
  if (!detail::is_zero_one(c_d) || !detail::is_zero_one(h))
    throw input_error("find_augmenting_edge works on 0/1 vectors");
  if (!h.leq(c_d)) throw input_error("flame support must lie within the digraph");
  if (!is_flame(g, h).first)
    throw precondition_error("the given subgraph is not a flame");
  Rat lam_h = lambda(g, h, u);
  Rat lam_d = lambda(g, c_d, u);
  if (lam_h == lam_d)
    throw precondition_error("no deficit at '" + g.name(u) + "'");

  TightSet tight = min_cut_maximal(g, h, u);
  for (const Edge& e : g.edges()) {
    if (!tight.set.count(e.head) || tight.set.count(e.tail)) continue;
    if (c_d.get(e.id) == 1 && h.get(e.id) == 0)
      return AugmentationStep{e.id, std::nullopt, std::move(tight), u};
  }
  throw std::logic_error("tight set admits no augmenting edge");
}

struct MaximalFlame {
  std::vector<EdgeId> edges;
  FlameReport report;
};

/// Grows a flame from the empty edge set, always augmenting at the
/// lowest-index deficit vertex, until every vertex reaches its
/// connectivity in D. The result is a basis of the flame greedoid:
/// rho(v) = lambda_F(v) = lambda_D(v) everywhere, with exactly
/// sum of lambda_D(v) edges.
inline MaximalFlame build_maximal_flame(const RootedDigraph& g) {
  CapacityVector ones = CapacityVector::ones(g);
  std::map<VertexId, Rat> target = lambda_all(g, ones);
  CapacityVector f;
  for (;;) {
    VertexId deficit = -1;
    for (const auto& [v, lam] : target) {
      if (lambda(g, f, v) != lam) {
        deficit = v;
        break;
      }
    }
    if (deficit < 0) break;
    AugmentationStep step = find_augmenting_edge(g, ones, f, deficit);
    f.set(step.edge, 1);
  }
  return MaximalFlame{f.support(), verify(g, ones, f)};
}

struct FractionalAugmentation {
  AugmentationStep step;
  CapacityVector augmented;  // y + epsilon * chi_e
};

/// One certified fractional augmentation of a flame y toward c at a deficit
/// vertex u. U is the subset-largest tight set of u under y, e the lowest-id
/// entering edge with slack, and
///
///   epsilon = min( c(e) - y(e),
///                  min { rho_y(W) - rho_y(U) : U strictly inside W,
///                        W inside V - root } )
///
/// where the inner minimum runs over one contracted max-flow per vertex
/// outside U and is dropped when U = V - root. The step raises lambda at
/// head(e) by exactly epsilon and keeps y a flame.
inline FractionalAugmentation fractional_augment(const RootedDigraph& g,
                                                 const CapacityVector& c,
                                                 const CapacityVector& y,
                                                 VertexId u) {
  if (u == g.root()) throw input_error("deficit vertex must differ from the root");
  if (!y.leq(c)) throw precondition_error("y exceeds the capacity somewhere");
  if (!is_flame(g, y).first)
    throw precondition_error("the given vector is not a fractional flame");
  Rat lam_y = lambda(g, y, u);
  Rat lam_c = lambda(g, c, u);
  if (lam_y == lam_c)
    throw precondition_error("no deficit at '" + g.name(u) + "'");

  TightSet tight = min_cut_maximal(g, y, u);
  EdgeId chosen = -1;
  for (const Edge& e : g.edges()) {
    if (!tight.set.count(e.head) || tight.set.count(e.tail)) continue;
    if (c.get(e.id) > y.get(e.id)) {
      chosen = e.id;
      break;
    }
  }
  if (chosen < 0) throw std::logic_error("tight set admits no slack edge");

  Rat eps = c.get(chosen) - y.get(chosen);
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    if (w == g.root() || tight.set.count(w)) continue;
    VertexSet group = tight.set;
    group.insert(w);
    auto [qg, qc] = contract_set(g, y, group, w);
    Rat candidate = lambda(qg, qc, qg.index_of(g.name(w))) - tight.value;
    eps = std::min(eps, candidate);
  }

  CapacityVector augmented = y.plus_scaled_unit(chosen, eps);
  return FractionalAugmentation{
      AugmentationStep{chosen, std::move(eps), std::move(tight), u},
      std::move(augmented)};
}

struct GreedoidCheckReport {
  int ground_set_size = 0;
  std::size_t flame_set_count = 0;
  bool contains_empty = false;
  bool augmentation = false;
  std::optional<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>>
      augmentation_counterexample;
  bool accessible = false;
  std::optional<std::vector<EdgeId>> accessibility_counterexample;
  std::vector<int> basis_sizes;  // distinct sizes of subset-maximal members
  long long sum_lambda = 0;      // shared size of all bases when the axioms hold
};

inline constexpr int kDefaultGreedoidEdgeBound = 12;

/// Exhaustive verification that the flame edge sets of D form a greedoid:
/// enumerates all edge subsets, tests the flame predicate on each, then
/// checks the empty set, the augmentation property over all member pairs,
/// accessibility, and basis equicardinality. Unit capacities; integer flow
/// arithmetic throughout.
inline GreedoidCheckReport check_greedoid_axioms(
    const RootedDigraph& g, int max_edges = kDefaultGreedoidEdgeBound) {
  const int m = g.edge_count();
  if (m > max_edges)
    throw bound_error("greedoid check limited to " + std::to_string(max_edges) +
                      " edges (got " + std::to_string(m) + ")");

  const int n = g.vertex_count();
  auto lambda_of_mask = [&](std::uint32_t mask, VertexId v) -> long long {
    detail::BlockingFlow<long long> solver(n);
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1u) {
        const Edge& e = g.edges()[i];
        solver.add_arc(e.tail, e.head, 1);
      }
    return solver.run(g.root(), v);
  };

  const std::uint32_t total = 1u << m;
  std::vector<char> member(total, 0);
  std::vector<std::uint32_t> members;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<int> indeg(n, 0);
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1u) ++indeg[g.edges()[i].head];
    bool flame = true;
    for (VertexId v = 0; v < n && flame; ++v) {
      if (v == g.root() || indeg[v] == 0) continue;
      if (lambda_of_mask(mask, v) != indeg[v]) flame = false;
    }
    if (flame) {
      member[mask] = 1;
      members.push_back(mask);
    }
  }
  std::stable_sort(members.begin(), members.end(),
                   [](std::uint32_t a, std::uint32_t b) {
                     return std::popcount(a) < std::popcount(b);
                   });

  auto ids_of = [&](std::uint32_t mask) {
    std::vector<EdgeId> ids;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1u) ids.push_back(g.edges()[i].id);
    return ids;
  };

  GreedoidCheckReport report;
  report.ground_set_size = m;
  report.flame_set_count = members.size();
  report.contains_empty = member[0];

  // Subset-maximal members, honestly (no reliance on the axiom under test).
  std::vector<char> maximal(members.size(), 1);
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      if ((members[i] & ~members[j]) == 0 && members[i] != members[j]) {
        maximal[i] = 0;
        break;
      }
    }
  for (size_t i = 0; i < members.size(); ++i) {
    if (!maximal[i]) continue;
    int size = std::popcount(members[i]);
    if (std::find(report.basis_sizes.begin(), report.basis_sizes.end(), size) ==
        report.basis_sizes.end())
      report.basis_sizes.push_back(size);
  }
  std::sort(report.basis_sizes.begin(), report.basis_sizes.end());

  report.augmentation = true;
  for (size_t i = 0; i < members.size() && report.augmentation; ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      std::uint32_t small = members[i], big = members[j];
      if (std::popcount(small) >= std::popcount(big)) continue;
      std::uint32_t candidates = big & ~small;
      bool extended = false;
      while (candidates) {
        std::uint32_t bit = candidates & (~candidates + 1);
        candidates ^= bit;
        if (member[small | bit]) {
          extended = true;
          break;
        }
      }
      if (!extended) {
        report.augmentation = false;
        report.augmentation_counterexample = {ids_of(small), ids_of(big)};
        break;
      }
    }

  std::vector<char> accessible(total, 0);
  accessible[0] = member[0];
  report.accessible = member[0];
  for (std::uint32_t mask : members) {  // ascending size
    if (mask == 0) continue;
    std::uint32_t bits = mask;
    bool ok = false;
    while (bits) {
      std::uint32_t bit = bits & (~bits + 1);
      bits ^= bit;
      if (member[mask ^ bit] && accessible[mask ^ bit]) {
        ok = true;
        break;
      }
    }
    accessible[mask] = ok;
    if (!ok && !report.accessibility_counterexample) {
      report.accessible = false;
      report.accessibility_counterexample = ids_of(mask);
    }
  }

  long long sum = 0;
  for (VertexId v = 0; v < n; ++v)
    if (v != g.root()) sum += lambda_of_mask(total - 1, v);
  report.sum_lambda = sum;
  return report;
}

}  // namespace flames
