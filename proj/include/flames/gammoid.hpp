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

// Oracles for the gammoid at a vertex v: the matroid on in(v) whose
// independent sets are the last-edge sets of systems of edge-disjoint
// root->v paths, and its fractional analogue over capacity-bounded flows.

#include <map>
#include <set>

#include "flames/digraph.hpp"
#include "flames/errors.hpp"
#include "flames/flow.hpp"
#include "flames/rational.hpp"

namespace flames {

/// I is independent iff deleting the other in-edges of v leaves
/// lambda(v) = |I|: any |I| edge-disjoint paths then end in |I| distinct
/// surviving in-edges, which must be exactly I. Unit capacities (multigraph
/// setting).
inline bool is_independent(const RootedDigraph& g, VertexId v,
                           const std::set<EdgeId>& I) {
  if (v == g.root()) throw input_error("gammoid vertex must differ from the root");
  for (EdgeId e : I)
    if (g.edge(e).head != v)
      throw input_error("edge " + std::to_string(e) + " does not enter the vertex");
  CapacityVector caps = CapacityVector::ones(g);
  for (EdgeId e : g.in_edges(v))
    if (!I.count(e)) caps.set(e, 0);
  return lambda(g, caps, v) == static_cast<int>(I.size());
}

/// e is a coloop of the gammoid at v = head(e) iff it lies in every maximum
/// independent set, iff deleting it drops the rank: lambda without e equals
/// lambda minus one.
inline bool is_coloop(const RootedDigraph& g, VertexId v, EdgeId e) {
  if (g.edge(e).head != v)
    throw input_error("edge " + std::to_string(e) + " does not enter the vertex");
  CapacityVector ones = CapacityVector::ones(g);
  Rat full = lambda(g, ones, v);
  ones.set(e, 0);
  return lambda(g, ones, v) == full - 1;
}

/// Membership of s in the polygammoid at v: is s the restriction to in(v)
/// of some flow below c? Replacing the in(v) capacities by s, a maximum flow
/// of amount sum(s) must saturate every in-edge at exactly s, so membership
/// reduces to one capacity edit and one max-flow call. Values of s above c
/// are plain non-membership, not an error.
inline bool polygammoid_member(const RootedDigraph& g, const CapacityVector& c,
                               VertexId v, const std::map<EdgeId, Rat>& s) {
  if (v == g.root()) throw input_error("gammoid vertex must differ from the root");
  Rat target = 0;
  for (const auto& [e, value] : s) {
    if (g.edge(e).head != v)
      throw input_error("edge " + std::to_string(e) + " does not enter the vertex");
    if (value < 0) throw input_error("negative in-edge value");
    target += value;
  }
  for (const auto& [e, value] : s)
    if (value > c.get(e)) return false;

  CapacityVector caps = c;
  for (EdgeId e : g.in_edges(v)) {
    auto it = s.find(e);
    caps.set(e, it == s.end() ? Rat(0) : it->second);
  }
  return lambda(g, caps, v) == target;
}

}  // namespace flames
