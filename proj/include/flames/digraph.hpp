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
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flames/errors.hpp"
#include "flames/rational.hpp"

namespace flames {

using VertexId = int;  // dense internal index, root included
using EdgeId = int;    // stable id, assigned once and never reused

using VertexSet = std::set<VertexId>;

struct Edge {
  EdgeId id;
  VertexId tail;
  VertexId head;
};

/// A rooted multidigraph. Vertices are dense indices 0..n-1 carrying the
/// opaque names they had in the input; edges are listed in ascending id
/// order. Parallel edges are allowed, loops are not. Instances are
/// immutable after construction; every operation returns a new graph.
class RootedDigraph {
 public:
  RootedDigraph(std::vector<std::string> vertex_names, VertexId root,
                std::vector<Edge> edges)
      : names_(std::move(vertex_names)), root_(root), edges_(std::move(edges)) {
    const int n = static_cast<int>(names_.size());
    if (root_ < 0 || root_ >= n) throw input_error("root index out of range");
    std::set<std::string> seen_names(names_.begin(), names_.end());
    if (static_cast<int>(seen_names.size()) != n)
      throw input_error("duplicate vertex name");
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    in_.assign(n, {});
    out_.assign(n, {});
    for (size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
        throw input_error("edge endpoint out of range");
      if (e.tail == e.head)
        throw input_error("loop edge " + std::to_string(e.id) + " at vertex '" +
                          names_[e.tail] + "'");
      if (!pos_by_id_.emplace(e.id, i).second)
        throw input_error("duplicate edge id " + std::to_string(e.id));
      in_[e.head].push_back(e.id);
      out_[e.tail].push_back(e.id);
    }
  }

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  VertexId root() const { return root_; }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }

  const Edge& edge(EdgeId id) const {
    auto it = pos_by_id_.find(id);
    if (it == pos_by_id_.end())
      throw input_error("unknown edge id " + std::to_string(id));
    return edges_[it->second];
  }
  bool has_edge(EdgeId id) const { return pos_by_id_.count(id) > 0; }

  /// Ids of edges with head v, ascending.
  const std::vector<EdgeId>& in_edges(VertexId v) const { return in_.at(v); }
  /// Ids of edges with tail v, ascending.
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_.at(v); }

  VertexId index_of(const std::string& name) const {
    for (int v = 0; v < vertex_count(); ++v)
      if (names_[v] == name) return v;
    throw input_error("unknown vertex id '" + name + "'");
  }
  bool has_vertex(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
  }

  bool same_structure(const RootedDigraph& other) const {
    if (names_ != other.names_ || root_ != other.root_) return false;
    if (edges_.size() != other.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].id != other.edges_[i].id ||
          edges_[i].tail != other.edges_[i].tail ||
          edges_[i].head != other.edges_[i].head)
        return false;
    }
    return true;
  }

 private:
  std::vector<std::string> names_;
  VertexId root_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> in_, out_;
  std::unordered_map<EdgeId, size_t> pos_by_id_;
};

/// Non-negative rational values indexed by edge id; an absent id means 0,
/// and zeros are never stored, so map equality is value equality. Doubles
/// as a subgraph through its positive support.
class CapacityVector {
 public:
  CapacityVector() = default;

  const Rat& get(EdgeId e) const {
    auto it = values_.find(e);
    return it == values_.end() ? zero_ : it->second;
  }

  void set(EdgeId e, Rat value) {
    if (value < 0)
      throw input_error("negative capacity on edge " + std::to_string(e));
    if (value == 0)
      values_.erase(e);
    else
      values_[e] = std::move(value);
  }

  const std::map<EdgeId, Rat>& entries() const { return values_; }

  std::vector<EdgeId> support() const {
    std::vector<EdgeId> s;
    s.reserve(values_.size());
    for (const auto& [e, v] : values_) s.push_back(e);
    return s;
  }

  bool is_zero() const { return values_.empty(); }

  bool is_integral() const {
    for (const auto& [e, v] : values_)
      if (!flames::is_integral(v)) return false;
    return true;
  }

  /// Componentwise x <= y (both non-negative, so only x's support matters).
  bool leq(const CapacityVector& other) const {
    for (const auto& [e, v] : values_)
      if (v > other.get(e)) return false;
    return true;
  }

  bool operator==(const CapacityVector& other) const = default;

  static CapacityVector ones(const RootedDigraph& g) {
    CapacityVector c;
    for (const Edge& e : g.edges()) c.set(e.id, 1);
    return c;
  }

  /// chi_e scaled: value on edge e, zero elsewhere.
  static CapacityVector unit(EdgeId e, Rat value = 1) {
    CapacityVector c;
    c.set(e, std::move(value));
    return c;
  }

  CapacityVector plus_scaled_unit(EdgeId e, const Rat& eps) const {
    CapacityVector c = *this;
    c.set(e, c.get(e) + eps);
    return c;
  }

 private:
  std::map<EdgeId, Rat> values_;
  inline static const Rat zero_{0};
};

/// In-capacity of U: sum of c over edges entering U from outside.
inline Rat rho(const RootedDigraph& g, const CapacityVector& c, const VertexSet& u) {
  Rat sum = 0;
  for (const Edge& e : g.edges())
    if (u.count(e.head) && !u.count(e.tail)) sum += c.get(e.id);
  return sum;
}

inline Rat rho(const RootedDigraph& g, const CapacityVector& c, VertexId v) {
  Rat sum = 0;
  for (EdgeId e : g.in_edges(v)) sum += c.get(e);
  return sum;
}

/// Out-capacity of U: sum of c over edges leaving U.
inline Rat delta(const RootedDigraph& g, const CapacityVector& c, const VertexSet& u) {
  Rat sum = 0;
  for (const Edge& e : g.edges())
    if (u.count(e.tail) && !u.count(e.head)) sum += c.get(e.id);
  return sum;
}

inline Rat delta(const RootedDigraph& g, const CapacityVector& c, VertexId v) {
  Rat sum = 0;
  for (EdgeId e : g.out_edges(v)) sum += c.get(e);
  return sum;
}

enum class Mode { integral, fractional };

struct NormalizeResult {
  RootedDigraph graph;
  CapacityVector capacities;
  // kept edge id -> original edge ids it stands for (a singleton except for
  // bundles merged in fractional mode)
  std::map<EdgeId, std::vector<EdgeId>> provenance;
  std::vector<std::string> warnings;
};

/// Enforces the model conventions: edges into the root are dropped (with a
/// warning), and in fractional mode each bundle of parallel edges collapses
/// into its lowest-id member with the capacities summed. Integral mode keeps
/// the multigraph as is.
inline NormalizeResult normalize(const RootedDigraph& g, const CapacityVector& c,
                                 Mode mode) {
  NormalizeResult result{g, {}, {}, {}};
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (e.head == g.root()) {
      result.warnings.push_back("dropped arc " + std::to_string(e.id) + " (" +
                                g.name(e.tail) + " -> " + g.name(e.head) +
                                "): the root has no in-edges");
      continue;
    }
    kept.push_back(e);
  }

  CapacityVector caps;
  std::map<EdgeId, std::vector<EdgeId>> provenance;
  if (mode == Mode::fractional) {
    std::map<std::pair<VertexId, VertexId>, EdgeId> bundle;  // (tail,head) -> kept id
    std::vector<Edge> merged;
    for (const Edge& e : kept) {
      auto key = std::make_pair(e.tail, e.head);
      auto it = bundle.find(key);
      if (it == bundle.end()) {
        bundle[key] = e.id;
        merged.push_back(e);
        caps.set(e.id, c.get(e.id));
        provenance[e.id] = {e.id};
      } else {
        caps.set(it->second, caps.get(it->second) + c.get(e.id));
        provenance[it->second].push_back(e.id);
      }
    }
    kept = std::move(merged);
  } else {
    for (const Edge& e : kept) {
      caps.set(e.id, c.get(e.id));
      provenance[e.id] = {e.id};
    }
  }

  result.graph = RootedDigraph(g.vertex_names(), g.root(), kept);
  result.capacities = std::move(caps);
  result.provenance = std::move(provenance);
  return result;
}

/// Contracts U into the vertex `into` (which must lie in U), deleting edges
/// with both ends in U and retargeting the rest. Edge ids and capacities
/// carry over unchanged.
inline std::pair<RootedDigraph, CapacityVector> contract_set(
    const RootedDigraph& g, const CapacityVector& c, const VertexSet& u,
    VertexId into) {
  if (!u.count(into)) throw input_error("contraction target not in the set");
  if (u.count(g.root())) throw input_error("cannot contract the root");

  std::vector<std::string> names;
  std::vector<int> remap(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (u.count(v) && v != into) continue;
    remap[v] = static_cast<int>(names.size());
    names.push_back(g.name(v));
  }
  for (VertexId v : u) remap[v] = remap[into];

  std::vector<Edge> edges;
  CapacityVector caps;
  for (const Edge& e : g.edges()) {
    if (u.count(e.tail) && u.count(e.head)) continue;
    edges.push_back({e.id, remap[e.tail], remap[e.head]});
    caps.set(e.id, c.get(e.id));
  }
  return {RootedDigraph(names, remap[g.root()], edges), std::move(caps)};
}

// ---------------------------------------------------------------------------
// Text format
//
//   # comment
//   root <vertex-id>
//   arc <tail> <head> [<capacity>]
//
// Capacity is a decimal ("2", "0.5") or a ratio ("5/6"), default 1. Edge ids
// are assigned 0,1,2,... in file order.
// ---------------------------------------------------------------------------

struct ParsedGraph {
  RootedDigraph graph;
  CapacityVector capacities;
};

inline ParsedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_root = false;
  std::string root_name;
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> index;
  auto intern = [&](const std::string& name) -> VertexId {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    VertexId v = static_cast<VertexId>(names.size());
    names.push_back(name);
    index.emplace(name, v);
    return v;
  };

  std::vector<Edge> edges;
  CapacityVector caps;
  EdgeId next_id = 0;

  while (std::getline(in, line)) {
    ++lineno;
    std::string where = "line " + std::to_string(lineno) + ": ";
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    std::istringstream fields(line);
    std::string directive;
    if (!(fields >> directive)) continue;  // blank or comment-only line

    if (directive == "root") {
      if (have_root) throw input_error(where + "second root directive");
      if (!edges.empty()) throw input_error(where + "root must precede arcs");
      if (!(fields >> root_name)) throw input_error(where + "root needs a vertex id");
      std::string extra;
      if (fields >> extra) throw input_error(where + "trailing tokens after root");
      have_root = true;
      intern(root_name);
      continue;
    }
    if (directive == "arc") {
      if (!have_root) throw input_error(where + "arc before root directive");
      std::string tail, head, cap_token;
      if (!(fields >> tail >> head))
        throw input_error(where + "arc needs a tail and a head");
      Rat cap = 1;
      if (fields >> cap_token) {
        auto parsed = try_parse_rational(cap_token);
        if (!parsed) throw input_error(where + "malformed capacity '" + cap_token + "'");
        cap = *parsed;
        std::string extra;
        if (fields >> extra) throw input_error(where + "trailing tokens after capacity");
      }
      if (tail == head) throw input_error(where + "loop arc at '" + tail + "'");
      EdgeId id = next_id++;
      edges.push_back({id, intern(tail), intern(head)});
      caps.set(id, cap);
      continue;
    }
    throw input_error(where + "unknown directive '" + directive + "'");
  }
  if (!have_root) throw input_error("missing root directive");
  return {RootedDigraph(names, index.at(root_name), edges), std::move(caps)};
}

/// Inverse of parse_graph up to comments: arcs in id order, so re-parsing
/// reassigns the same ids (0,1,2,... densely).
inline std::string serialize_graph(const RootedDigraph& g, const CapacityVector& c) {
  std::ostringstream out;
  out << "root " << g.name(g.root()) << "\n";
  for (const Edge& e : g.edges())
    out << "arc " << g.name(e.tail) << " " << g.name(e.head) << " "
        << rat_to_string(c.get(e.id)) << "\n";
  return out.str();
}

}  // namespace flames
