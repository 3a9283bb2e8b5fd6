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

// JSON views of the report types, as emitted by the CLI. Rationals always
// serialize as lowest-terms "p/q" strings; vertex ids as their input names;
// capacity vectors as arrays of {edge, tail, head, value} rows in edge-id
// order.

#include <json.hpp>

#include "flames/digraph.hpp"
#include "flames/flame.hpp"
#include "flames/flow.hpp"
#include "flames/greedoid.hpp"

namespace flames {

using json = nlohmann::json;

inline json capacity_json(const RootedDigraph& g, const CapacityVector& c) {
  json rows = json::array();
  for (const Edge& e : g.edges())
    rows.push_back({{"edge", e.id},
                    {"tail", g.name(e.tail)},
                    {"head", g.name(e.head)},
                    {"value", rat_to_string(c.get(e.id))}});
  return rows;
}

inline json vertex_index_json(const RootedDigraph& g) {
  json map = json::object();
  for (int v = 0; v < g.vertex_count(); ++v) map[g.name(v)] = v;
  return map;
}

inline json lambda_table_json(const RootedDigraph& g,
                              const std::map<VertexId, Rat>& table) {
  json rows = json::object();
  for (const auto& [v, value] : table) rows[g.name(v)] = rat_to_string(value);
  return rows;
}

inline json tight_set_json(const RootedDigraph& g, const TightSet& tight) {
  json vertices = json::array();
  for (VertexId v : tight.set) vertices.push_back(g.name(v));
  return {{"vertices", vertices}, {"value", rat_to_string(tight.value)}};
}

inline json flame_report_json(const RootedDigraph& g, const FlameReport& report) {
  json vertices = json::object();
  for (const auto& row : report.rows)
    vertices[g.name(row.v)] = {{"lambda_c", rat_to_string(row.lambda_c)},
                               {"lambda_f", rat_to_string(row.lambda_f)},
                               {"rho_f", rat_to_string(row.rho_f)}};
  return {{"vertices", vertices},
          {"is_flame", report.is_flame},
          {"preserves", report.preserves},
          {"f_le_c", report.f_le_c},
          {"integral", report.integral}};
}

inline json trace_json(const RootedDigraph& g, const ExtractionTrace& trace) {
  json order = json::array();
  for (VertexId v : trace.order) order.push_back(g.name(v));
  json steps = json::array();
  for (const auto& step : trace.steps) {
    json changes = json::array();
    for (const auto& change : step.changes)
      changes.push_back({{"edge", change.edge},
                         {"before", rat_to_string(change.before)},
                         {"after", rat_to_string(change.after)}});
    steps.push_back({{"sink", g.name(step.sink)},
                     {"amount", rat_to_string(step.amount)},
                     {"changes", changes}});
  }
  return {{"order", order}, {"steps", steps}};
}

inline json decomposition_json(const RootedDigraph& g, const PathDecomposition& d) {
  auto piece = [&](const WeightedPath& p) {
    json edges = json::array();
    for (EdgeId e : p.edges) edges.push_back(e);
    return json{{"edges", edges}, {"weight", rat_to_string(p.weight)}};
  };
  json paths = json::array(), cycles = json::array();
  for (const auto& p : d.paths) paths.push_back(piece(p));
  for (const auto& c : d.cycles) cycles.push_back(piece(c));
  return {{"paths", paths}, {"cycles", cycles}};
}

inline json augmentation_step_json(const RootedDigraph& g,
                                   const AugmentationStep& step) {
  json out = {{"edge", step.edge},
              {"tight_set", tight_set_json(g, step.tight_set)},
              {"deficit_vertex", g.name(step.deficit_vertex)}};
  out["epsilon"] = step.epsilon ? json(rat_to_string(*step.epsilon)) : json(nullptr);
  return out;
}

inline json greedoid_report_json(const RootedDigraph& g,
                                 const GreedoidCheckReport& report) {
  json out = {{"ground_set_size", report.ground_set_size},
              {"flame_set_count", report.flame_set_count},
              {"contains_empty", report.contains_empty},
              {"augmentation", report.augmentation},
              {"accessible", report.accessible},
              {"basis_sizes", report.basis_sizes},
              {"sum_lambda", report.sum_lambda}};
  if (report.augmentation_counterexample) {
    out["augmentation_counterexample"] = {
        {"smaller", report.augmentation_counterexample->first},
        {"larger", report.augmentation_counterexample->second}};
  } else {
    out["augmentation_counterexample"] = nullptr;
  }
  out["accessibility_counterexample"] =
      report.accessibility_counterexample
          ? json(*report.accessibility_counterexample)
          : json(nullptr);
  return out;
}

}  // namespace flames
