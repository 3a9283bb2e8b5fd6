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

// A capacity vector f is a flame if lambda_f(v) = rho_f(v) at every non-root
// vertex: everything a vertex can take in, it can take in along flows from
// the root. extract_flame peels an input capacity down to a flame that keeps
// every flow-connectivity of the original, one vertex at a time.

#include <algorithm>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "flames/digraph.hpp"
#include "flames/errors.hpp"
#include "flames/flow.hpp"
#include "flames/rational.hpp"

namespace flames {

/// Per-vertex comparison of the three quantities the extraction contract
/// equates. Flags are always recomputed from the numeric columns.
struct FlameReport {
  struct VertexRow {
    VertexId v;
    Rat lambda_c;
    Rat lambda_f;
    Rat rho_f;
  };
  std::vector<VertexRow> rows;  // every non-root vertex, ascending
  bool is_flame = false;   // all lambda_f == rho_f
  bool preserves = false;  // all lambda_f == lambda_c
  bool f_le_c = false;
  bool integral = false;
};

struct ExtractionTrace {
  struct Change {
    EdgeId edge;
    Rat before;
    Rat after;
  };
  struct Step {
    VertexId sink;
    Rat amount;
    std::vector<Change> changes;
  };
  std::vector<VertexId> order;
  std::vector<Step> steps;
};

namespace detail {

inline FlameReport make_report(const RootedDigraph& g, const CapacityVector& c,
                               const CapacityVector& f, bool same_vector) {
  FlameReport report;
  report.is_flame = true;
  report.preserves = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == g.root()) continue;
    Rat lf = lambda(g, f, v);
    Rat lc = same_vector ? lf : lambda(g, c, v);
    Rat rf = rho(g, f, v);
    if (lf != rf) report.is_flame = false;
    if (lf != lc) report.preserves = false;
    report.rows.push_back({v, std::move(lc), std::move(lf), std::move(rf)});
  }
  report.f_le_c = f.leq(c);
  report.integral = f.is_integral();
  return report;
}

}  // namespace detail

/// Independent verification of an extraction contract for any f against any
/// c: fresh max-flow calls for both lambda columns, componentwise f <= c,
/// integrality. An f above c is reported through the flag, not rejected.
inline FlameReport verify(const RootedDigraph& g, const CapacityVector& c,
                          const CapacityVector& f) {
  for (EdgeId e : f.support())
    if (!g.has_edge(e))
      throw input_error("vector has a value on unknown edge id " + std::to_string(e));
  return detail::make_report(g, c, f, false);
}

inline std::pair<bool, FlameReport> is_flame(const RootedDigraph& g,
                                             const CapacityVector& f) {
  for (EdgeId e : f.support())
    if (!g.has_edge(e))
      throw input_error("vector has a value on unknown edge id " + std::to_string(e));
  FlameReport report = detail::make_report(g, f, f, true);
  return {report.is_flame, std::move(report)};
}

namespace detail {

inline void check_order(const RootedDigraph& g, const std::vector<VertexId>& order) {
  std::vector<VertexId> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<VertexId> expected;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (v != g.root()) expected.push_back(v);
  if (sorted != expected)
    throw input_error("order must enumerate every non-root vertex exactly once");
}

}  // namespace detail

/// Every non-root vertex, ascending internal index: the default peeling order.
inline std::vector<VertexId> default_order(const RootedDigraph& g) {
  std::vector<VertexId> order;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (v != g.root()) order.push_back(v);
  return order;
}

/// The peeling extraction. Starting from f = c, each step computes a maximum
/// flow z to the next vertex v under the current f and replaces f on in(v)
/// by z. The result satisfies f <= c and
/// lambda_f(v) = lambda_c(v) = rho_f(v) for every non-root v, stays integral
/// for integral c, and no step changes any flow-connectivity (each is
/// trim_unused applied once).
inline std::pair<CapacityVector, ExtractionTrace> extract_flame(
    const RootedDigraph& g, const CapacityVector& c,
    const std::vector<VertexId>& order) {
  detail::check_order(g, order);
  CapacityVector f = c;
  ExtractionTrace trace;
  trace.order = order;
  for (VertexId v : order) {
    Flow z = max_flow(g, f, v);
    ExtractionTrace::Step step{v, z.amount, {}};
    for (EdgeId e : g.in_edges(v)) {
      const Rat& before = f.get(e);
      const Rat& after = z.values.get(e);
      if (before == after) continue;
      step.changes.push_back({e, before, after});
      f.set(e, after);
    }
    trace.steps.push_back(std::move(step));
  }
  return {std::move(f), std::move(trace)};
}

inline std::pair<CapacityVector, ExtractionTrace> extract_flame(
    const RootedDigraph& g, const CapacityVector& c) {
  return extract_flame(g, c, default_order(g));
}

struct IntegralExtraction {
  std::vector<EdgeId> subgraph;  // support of f; for unit capacities, the
                                 // kept edge set of the spanning subdigraph
  CapacityVector f;
  FlameReport report;
  ExtractionTrace trace;
};

/// Integral specialization: for a unit-capacity multigraph the extracted
/// support is a spanning subdigraph H with
/// lambda_D(v) = lambda_H(v) = indegree_H(v), hence exactly
/// sum of lambda_D(v) edges.
inline IntegralExtraction extract_flame_integral(const RootedDigraph& g,
                                                 const CapacityVector& c,
                                                 const std::vector<VertexId>& order) {
  if (!c.is_integral())
    throw input_error("integral extraction requires integral capacities");
  auto [f, trace] = extract_flame(g, c, order);
  FlameReport report = verify(g, c, f);
  return IntegralExtraction{f.support(), std::move(f), std::move(report),
                            std::move(trace)};
}

inline IntegralExtraction extract_flame_integral(const RootedDigraph& g,
                                                 const CapacityVector& c) {
  return extract_flame_integral(g, c, default_order(g));
}

/// One peeling step in isolation: recomputes in(v) from a maximum flow and
/// keeps c elsewhere. Never changes lambda at any vertex.
inline CapacityVector trim_unused(const RootedDigraph& g, const CapacityVector& c,
                                  VertexId v) {
  Flow z = max_flow(g, c, v);
  CapacityVector y = c;
  for (EdgeId e : g.in_edges(v)) y.set(e, z.values.get(e));
  return y;
}

}  // namespace flames
