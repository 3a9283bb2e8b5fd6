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

// Brute-force reference implementations. These deliberately share no flow or
// cut code with the fast path: connectivities come from enumerating all cut
// sets, independence from backtracking over explicit path systems. They
// certify the fast path at desk scale and are not built for performance.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "flames/digraph.hpp"
#include "flames/errors.hpp"
#include "flames/rational.hpp"

namespace flames::oracle {

inline constexpr int kMaxBruteVertices = 16;
inline constexpr int kMaxBruteIndependenceEdges = 14;
inline constexpr int kMaxBruteFlameEdges = 12;

/// min { rho_c(W) : v in W, W subseteq V - root }, by enumerating all
/// 2^(n-2) candidate sets.
inline Rat brute_lambda(const RootedDigraph& g, const CapacityVector& c, VertexId v) {
  const int n = g.vertex_count();
  if (n > kMaxBruteVertices)
    throw bound_error("brute_lambda limited to " +
                      std::to_string(kMaxBruteVertices) + " vertices");
  if (v == g.root()) throw input_error("lambda target must differ from the root");

  std::vector<VertexId> free_vertices;
  for (VertexId w = 0; w < n; ++w)
    if (w != g.root() && w != v) free_vertices.push_back(w);

  std::vector<char> in_set(n, false);
  in_set[v] = true;
  bool first = true;
  Rat best = 0;
  const std::uint32_t total = 1u << free_vertices.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    for (size_t i = 0; i < free_vertices.size(); ++i)
      in_set[free_vertices[i]] = (mask >> i) & 1u;
    Rat cut = 0;
    for (const Edge& e : g.edges())
      if (in_set[e.head] && !in_set[e.tail]) cut += c.get(e.id);
    if (first || cut < best) {
      best = std::move(cut);
      first = false;
    }
  }
  return best;
}

/// brute_lambda for every non-root vertex in one sweep over all subsets of
/// V - root.
inline std::map<VertexId, Rat> brute_lambda_all(const RootedDigraph& g,
                                                const CapacityVector& c) {
  const int n = g.vertex_count();
  if (n > kMaxBruteVertices)
    throw bound_error("brute_lambda limited to " +
                      std::to_string(kMaxBruteVertices) + " vertices");
  std::vector<VertexId> non_root;
  for (VertexId w = 0; w < n; ++w)
    if (w != g.root()) non_root.push_back(w);

  std::map<VertexId, Rat> best;
  std::vector<char> have(n, false);
  std::vector<char> in_set(n, false);
  const std::uint32_t total = 1u << non_root.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    for (size_t i = 0; i < non_root.size(); ++i)
      in_set[non_root[i]] = (mask >> i) & 1u;
    Rat cut = 0;
    for (const Edge& e : g.edges())
      if (in_set[e.head] && !in_set[e.tail]) cut += c.get(e.id);
    for (VertexId w : non_root) {
      if (!in_set[w]) continue;
      if (!have[w] || cut < best[w]) {
        best[w] = cut;
        have[w] = true;
      }
    }
  }
  return best;
}

namespace detail {

// Searches for pairwise edge-disjoint simple r->v paths whose last edges are
// exactly `last_edges` (in order), extending path `index` first.
inline bool link_search(const RootedDigraph& g, VertexId v,
                        const std::vector<EdgeId>& last_edges, size_t index,
                        std::set<EdgeId>& used) {
  if (index == last_edges.size()) return true;
  const VertexId target = g.edge(last_edges[index]).tail;

  // Depth-first over simple paths from the root to `target` that avoid v and
  // all used edges; on success, claim the last edge and recurse.
  std::vector<char> on_path(g.vertex_count(), false);
  std::vector<EdgeId> trail;

  auto dfs = [&](auto&& self, VertexId cur) -> bool {
    if (cur == target) {
      used.insert(last_edges[index]);
      for (EdgeId e : trail) used.insert(e);
      if (link_search(g, v, last_edges, index + 1, used)) return true;
      used.erase(last_edges[index]);
      for (EdgeId e : trail) used.erase(e);
      return false;
    }
    on_path[cur] = true;
    for (EdgeId e : g.out_edges(cur)) {
      if (used.count(e)) continue;
      VertexId next = g.edge(e).head;
      if (next == v || on_path[next]) continue;
      trail.push_back(e);
      if (self(self, next)) return true;  // keep used/trail claimed upstream
      trail.pop_back();
    }
    on_path[cur] = false;
    return false;
  };
  return dfs(dfs, g.root());
}

}  // namespace detail

/// Exhaustive test for independence in the gammoid at v: is there a system
/// of pairwise edge-disjoint r->v paths whose last edges are exactly I?
inline bool brute_independent(const RootedDigraph& g, VertexId v,
                              const std::set<EdgeId>& I) {
  if (g.edge_count() > kMaxBruteIndependenceEdges)
    throw bound_error("brute_independent limited to " +
                      std::to_string(kMaxBruteIndependenceEdges) + " edges");
  if (v == g.root()) throw input_error("gammoid vertex must differ from the root");
  for (EdgeId e : I)
    if (g.edge(e).head != v)
      throw input_error("edge " + std::to_string(e) + " does not enter the vertex");
  std::vector<EdgeId> last_edges(I.begin(), I.end());
  std::set<EdgeId> used;
  return detail::link_search(g, v, last_edges, 0, used);
}

/// All edge subsets whose induced subgraph is a flame, via cut enumeration
/// with unit capacities. Integer arithmetic throughout.
inline std::vector<std::vector<EdgeId>> enumerate_flames(const RootedDigraph& g) {
  const int m = g.edge_count();
  if (m > kMaxBruteFlameEdges)
    throw bound_error("enumerate_flames limited to " +
                      std::to_string(kMaxBruteFlameEdges) + " edges");
  const int n = g.vertex_count();
  if (n > kMaxBruteVertices)
    throw bound_error("enumerate_flames limited to " +
                      std::to_string(kMaxBruteVertices) + " vertices");
  std::vector<VertexId> non_root;
  for (VertexId w = 0; w < n; ++w)
    if (w != g.root()) non_root.push_back(w);

  std::vector<std::vector<EdgeId>> flames;
  for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
    std::vector<int> lambda_min(n, -1), indeg(n, 0);
    std::vector<char> in_set(n, false);
    for (int i = 0; i < m; ++i)
      if ((subset >> i) & 1u) ++indeg[g.edges()[i].head];
    const std::uint32_t sets = 1u << non_root.size();
    for (std::uint32_t mask = 0; mask < sets; ++mask) {
      for (size_t i = 0; i < non_root.size(); ++i)
        in_set[non_root[i]] = (mask >> i) & 1u;
      int cut = 0;
      for (int i = 0; i < m; ++i) {
        if (!((subset >> i) & 1u)) continue;
        const Edge& e = g.edges()[i];
        if (in_set[e.head] && !in_set[e.tail]) ++cut;
      }
      for (VertexId w : non_root)
        if (in_set[w] && (lambda_min[w] < 0 || cut < lambda_min[w]))
          lambda_min[w] = cut;
    }
    bool flame = true;
    for (VertexId w : non_root)
      if (lambda_min[w] != indeg[w]) {
        flame = false;
        break;
      }
    if (flame) {
      std::vector<EdgeId> edge_ids;
      for (int i = 0; i < m; ++i)
        if ((subset >> i) & 1u) edge_ids.push_back(g.edges()[i].id);
      flames.push_back(std::move(edge_ids));
    }
  }
  return flames;
}

enum class CapacityMode { unit, integral, rational };

struct InstanceSpec {
  int vertices = 4;
  int edges = 6;
  CapacityMode mode = CapacityMode::unit;
  int max_value = 3;          // integral mode
  int denominator_bound = 10; // rational mode
  std::uint64_t seed = 0;
};

struct Instance {
  RootedDigraph graph;
  CapacityVector capacities;
};

namespace detail {

// mt19937_64 is bit-identical everywhere; std::uniform_int_distribution is
// not, so sampling is done by modulo.
inline std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace detail

/// Seeded reproducible random instance: arcs sampled with replacement over
/// all (tail, head) pairs with head neither equal to the tail nor the root
/// (so parallel arcs happen, loops and root in-edges do not).
inline Instance gen_instance(const InstanceSpec& spec) {
  if (spec.vertices < 1) throw input_error("instance needs at least one vertex");
  if (spec.vertices < 2 && spec.edges > 0)
    throw input_error("arcs need at least two vertices");
  std::mt19937_64 rng(spec.seed);
  std::vector<std::string> names{"r"};
  for (int i = 1; i < spec.vertices; ++i) names.push_back("v" + std::to_string(i));

  std::vector<Edge> edges;
  CapacityVector caps;
  for (int i = 0; i < spec.edges; ++i) {
    VertexId head = 1 + static_cast<VertexId>(detail::next_below(rng, spec.vertices - 1));
    VertexId tail;
    do {
      tail = static_cast<VertexId>(detail::next_below(rng, spec.vertices));
    } while (tail == head);
    Rat cap = 1;
    switch (spec.mode) {
      case CapacityMode::unit:
        break;
      case CapacityMode::integral:
        cap = Rat(1 + static_cast<int>(detail::next_below(rng, spec.max_value)));
        break;
      case CapacityMode::rational: {
        int den = 1 + static_cast<int>(detail::next_below(rng, spec.denominator_bound));
        int num = 1 + static_cast<int>(detail::next_below(rng, 3 * den));
        cap = Rat(num, den);
        break;
      }
    }
    edges.push_back({i, tail, head});
    caps.set(i, cap);
  }
  return Instance{RootedDigraph(names, 0, edges), std::move(caps)};
}

}  // namespace flames::oracle
