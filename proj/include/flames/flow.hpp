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

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "flames/digraph.hpp"
#include "flames/errors.hpp"
#include "flames/rational.hpp"

namespace flames {

namespace detail {

// Blocking-flow (Dinic) max flow over level graphs. The phase count is
// bounded by the vertex count independently of the capacity values, so the
// routine is strongly polynomial over exact rationals as well as integers.
// T needs exact +, -, <, and copy; used with Rat and long long.
template <typename T>
class BlockingFlow {
 public:
  explicit BlockingFlow(int vertex_count)
      : n_(vertex_count), adj_(vertex_count), level_(vertex_count),
        iter_(vertex_count) {}

  // Returns a handle for querying the flow pushed through this arc.
  int add_arc(int from, int to, T cap) {
    handles_.push_back({from, static_cast<int>(adj_[from].size()), cap});
    adj_[from].push_back({to, static_cast<int>(adj_[to].size()), std::move(cap)});
    adj_[to].push_back({from, static_cast<int>(adj_[from].size()) - 1, T(0)});
    return static_cast<int>(handles_.size()) - 1;
  }

  T run(int s, int t) {
    T inf(1);
    for (const auto& h : handles_) inf += h.initial;
    T total(0);
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      for (;;) {
        T pushed = dfs(s, t, inf);
        if (!(pushed > T(0))) break;
        total += pushed;
      }
    }
    return total;
  }

  T flow_on(int handle) const {
    const Handle& h = handles_[handle];
    return h.initial - adj_[h.vertex][h.arc].cap;
  }

  // Vertices reachable from s through arcs with positive residual capacity.
  std::vector<bool> residual_reachable(int s) const {
    std::vector<bool> seen(n_, false);
    std::vector<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (const Arc& a : adj_[v])
        if (!seen[a.to] && a.cap > T(0)) {
          seen[a.to] = true;
          queue.push_back(a.to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int rev;
    T cap;
  };
  struct Handle {
    int vertex;
    int arc;
    T initial;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue{s};
    level_[s] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (const Arc& a : adj_[v])
        if (level_[a.to] < 0 && a.cap > T(0)) {
          level_[a.to] = level_[v] + 1;
          queue.push_back(a.to);
        }
    }
    return level_[t] >= 0;
  }

  T dfs(int v, int t, T limit) {
    if (v == t) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
      Arc& a = adj_[v][i];
      if (a.cap > T(0) && level_[a.to] == level_[v] + 1) {
        T pushed = dfs(a.to, t, std::min(limit, a.cap));
        if (pushed > T(0)) {
          a.cap -= pushed;
          adj_[a.to][a.rev].cap += pushed;
          return pushed;
        }
      }
    }
    return T(0);
  }

  int n_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_;
  std::vector<int> iter_;
  std::vector<Handle> handles_;
};

// Solver over the digraph's edges, keeping the edge-id <-> arc mapping.
class EdgeFlowSolver {
 public:
  EdgeFlowSolver(const RootedDigraph& g, const CapacityVector& c)
      : graph_(g), solver_(g.vertex_count()) {
    for (const Edge& e : g.edges())
      handle_.emplace(e.id, solver_.add_arc(e.tail, e.head, c.get(e.id)));
  }

  Rat run(VertexId s, VertexId t) { return solver_.run(s, t); }

  CapacityVector flow_values() const {
    CapacityVector x;
    for (const auto& [id, h] : handle_) x.set(id, solver_.flow_on(h));
    return x;
  }

  std::vector<bool> residual_reachable(VertexId s) const {
    return solver_.residual_reachable(s);
  }

 private:
  const RootedDigraph& graph_;
  BlockingFlow<Rat> solver_;
  std::map<EdgeId, int> handle_;
};

}  // namespace detail

/// An r->sink flow: conservation at every vertex except root and sink,
/// nothing into the root, nothing out of the sink, amount = delta at root.
struct Flow {
  VertexId sink;
  CapacityVector values;
  Rat amount;
};

struct WeightedPath {
  std::vector<EdgeId> edges;
  Rat weight;
};

/// Weighted root->sink paths plus weighted cycles summing exactly to the
/// decomposed flow.
struct PathDecomposition {
  std::vector<WeightedPath> paths;
  std::vector<WeightedPath> cycles;
};

/// The subset-largest minimizer of rho_c among sets containing the target
/// and avoiding the root.
struct TightSet {
  VertexSet set;
  Rat value;
};

namespace detail {

// Finds a directed cycle in the positive support of `values`, as an edge-id
// sequence, or an empty vector if the support is acyclic.
inline std::vector<EdgeId> find_support_cycle(const RootedDigraph& g,
                                              const CapacityVector& values) {
  const int n = g.vertex_count();
  std::vector<int> color(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<EdgeId> path;
  std::vector<int> enter_pos(n, -1);

  struct Frame {
    VertexId v;
    size_t next = 0;
  };
  for (int start = 0; start < n; ++start) {
    if (color[start] != 0) continue;
    std::vector<Frame> stack{{start}};
    color[start] = 1;
    enter_pos[start] = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& out = g.out_edges(f.v);
      bool descended = false;
      while (f.next < out.size()) {
        EdgeId e = out[f.next++];
        if (!(values.get(e) > 0)) continue;
        VertexId w = g.edge(e).head;
        if (color[w] == 1) {
          std::vector<EdgeId> cycle(path.begin() + enter_pos[w], path.end());
          cycle.push_back(e);
          return cycle;
        }
        if (color[w] == 0) {
          path.push_back(e);
          color[w] = 1;
          enter_pos[w] = static_cast<int>(path.size());
          stack.push_back({w});
          descended = true;
          break;
        }
      }
      if (!descended) {
        color[f.v] = 2;
        stack.pop_back();
        if (!path.empty()) path.pop_back();
      }
    }
  }
  return {};
}

inline void cancel_cycles(const RootedDigraph& g, CapacityVector& values) {
  for (;;) {
    std::vector<EdgeId> cycle = find_support_cycle(g, values);
    if (cycle.empty()) return;
    Rat w = values.get(cycle.front());
    for (EdgeId e : cycle) w = std::min(w, values.get(e));
    for (EdgeId e : cycle) values.set(e, values.get(e) - w);
  }
}

}  // namespace detail

/// Maximum r->sink flow under capacity c, exact. The result is cycle-free,
/// which in particular forces delta at the sink to zero; with integral c the
/// values are integral.
inline Flow max_flow(const RootedDigraph& g, const CapacityVector& c, VertexId sink) {
  if (sink == g.root()) throw input_error("sink must differ from the root");
  if (sink < 0 || sink >= g.vertex_count()) throw input_error("sink out of range");
  detail::EdgeFlowSolver solver(g, c);
  solver.run(g.root(), sink);
  CapacityVector x = solver.flow_values();
  detail::cancel_cycles(g, x);
  Rat amount = delta(g, x, g.root());
  return Flow{sink, std::move(x), std::move(amount)};
}

/// Flow-connectivity lambda_c(v): the maximum amount of an r->v flow below c.
inline Rat lambda(const RootedDigraph& g, const CapacityVector& c, VertexId v) {
  if (v == g.root()) throw input_error("lambda target must differ from the root");
  if (v < 0 || v >= g.vertex_count()) throw input_error("lambda target out of range");
  detail::EdgeFlowSolver solver(g, c);
  return solver.run(g.root(), v);
}

inline std::map<VertexId, Rat> lambda_all(const RootedDigraph& g,
                                          const CapacityVector& c) {
  std::map<VertexId, Rat> table;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (v != g.root()) table[v] = lambda(g, c, v);
  return table;
}

/// The unique subset-largest U within V-root with v in U and
/// rho_c(U) = lambda_c(v): the complement of the residual-reachable side of
/// any maximum flow. Canonical regardless of which maximum flow was found.
inline TightSet min_cut_maximal(const RootedDigraph& g, const CapacityVector& c,
                                VertexId v) {
  if (v == g.root()) throw input_error("cut target must differ from the root");
  if (v < 0 || v >= g.vertex_count()) throw input_error("cut target out of range");
  detail::EdgeFlowSolver solver(g, c);
  Rat amount = solver.run(g.root(), v);
  std::vector<bool> reachable = solver.residual_reachable(g.root());
  VertexSet set;
  for (int w = 0; w < g.vertex_count(); ++w)
    if (!reachable[w]) set.insert(w);
  return TightSet{std::move(set), std::move(amount)};
}

/// Greedy peeling of a flow into weighted root->sink paths and weighted
/// cycles. Each extraction zeroes at least one support edge, so the number
/// of pieces never exceeds the support size.
inline PathDecomposition decompose(const RootedDigraph& g, const Flow& x) {
  for (const auto& [e, v] : x.values.entries())
    if (!g.has_edge(e)) throw input_error("flow value on unknown edge id");
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (u == g.root() || u == x.sink) continue;
    if (rho(g, x.values, u) != delta(g, x.values, u))
      throw input_error("flow conservation violated at '" + g.name(u) + "'");
  }
  if (rho(g, x.values, g.root()) != 0)
    throw input_error("flow enters the root");
  if (delta(g, x.values, x.sink) != 0)
    throw input_error("flow leaves the sink");
  if (x.amount != delta(g, x.values, g.root()))
    throw input_error("flow amount does not match its values");

  CapacityVector work = x.values;
  PathDecomposition result;

  auto positive_out = [&](VertexId v) -> EdgeId {
    for (EdgeId e : g.out_edges(v))
      if (work.get(e) > 0) return e;
    return -1;
  };
  auto subtract = [&](const std::vector<EdgeId>& seq) -> Rat {
    Rat w = work.get(seq.front());
    for (EdgeId e : seq) w = std::min(w, work.get(e));
    for (EdgeId e : seq) work.set(e, work.get(e) - w);
    return w;
  };

  // Peel root->sink paths; cycles met on the way are peeled first so the
  // walk can restart on a strictly smaller support.
  while (delta(g, work, g.root()) > 0) {
    std::vector<EdgeId> walk;
    std::vector<int> enter_pos(g.vertex_count(), -1);
    VertexId cur = g.root();
    enter_pos[cur] = 0;
    for (;;) {
      if (cur == x.sink) {
        Rat w = subtract(walk);
        result.paths.push_back({std::move(walk), std::move(w)});
        break;
      }
      EdgeId e = positive_out(cur);  // exists by conservation
      VertexId next = g.edge(e).head;
      if (enter_pos[next] >= 0) {
        std::vector<EdgeId> cycle(walk.begin() + enter_pos[next], walk.end());
        cycle.push_back(e);
        Rat w = subtract(cycle);
        result.cycles.push_back({std::move(cycle), std::move(w)});
        break;
      }
      walk.push_back(e);
      enter_pos[next] = static_cast<int>(walk.size());
      cur = next;
    }
  }

  // What remains is a circulation that avoids both the root and the sink.
  for (;;) {
    EdgeId start = -1;
    for (const auto& [e, v] : work.entries())
      if (v > 0) {
        start = e;
        break;
      }
    if (start < 0) break;
    std::vector<EdgeId> walk;
    std::vector<int> enter_pos(g.vertex_count(), -1);
    VertexId cur = g.edge(start).tail;
    enter_pos[cur] = 0;
    for (;;) {
      EdgeId e = positive_out(cur);
      VertexId next = g.edge(e).head;
      if (enter_pos[next] >= 0) {
        std::vector<EdgeId> cycle(walk.begin() + enter_pos[next], walk.end());
        cycle.push_back(e);
        Rat w = subtract(cycle);
        result.cycles.push_back({std::move(cycle), std::move(w)});
        break;
      }
      walk.push_back(e);
      enter_pos[next] = static_cast<int>(walk.size());
      cur = next;
    }
  }
  return result;
}

}  // namespace flames
