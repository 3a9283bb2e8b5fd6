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

// Command-line front end. Reads graphs in the line-oriented text format,
// runs extraction / verification / checks, and prints one JSON report on
// standard output. Diagnostics go to standard error.
//
// Exit codes:
//   0  success
//   1  a verified contract or operation precondition failed
//   2  malformed or incompatible input
//   3  brute-force size bound exceeded

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "flames/flames.hpp"
#include "flames/json_io.hpp"

namespace {

using namespace flames;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

struct LoadedGraph {
  RootedDigraph graph;
  CapacityVector capacities;
  std::vector<std::string> warnings;
  std::string digest;
};

Mode resolve_mode(const std::string& flag, const CapacityVector& raw_caps) {
  if (flag == "integral") return Mode::integral;
  if (flag == "fractional") return Mode::fractional;
  return raw_caps.is_integral() ? Mode::integral : Mode::fractional;
}

LoadedGraph load_graph(const std::string& path, Mode mode) {
  std::string text = read_file(path);
  ParsedGraph parsed = parse_graph(text);
  NormalizeResult norm = normalize(parsed.graph, parsed.capacities, mode);
  return {std::move(norm.graph), std::move(norm.capacities),
          std::move(norm.warnings), fnv1a_hex(text)};
}

struct Report {
  std::string command;
  std::string input_path;
  std::string digest;
  json mode = nullptr;
  json vertex_order = nullptr;
  std::vector<std::string> warnings;
  json vertex_index;
  json result;

  void print(double wall_ms) const {
    json out = {{"command", command},
                {"input", {{"path", input_path}, {"digest", digest}}},
                {"mode", mode},
                {"vertex_order", vertex_order},
                {"warnings", warnings},
                {"vertex_index", vertex_index},
                {"wall_time_ms", wall_ms},
                {"result", result}};
    std::cout << out.dump(2) << "\n";
  }
};

json order_names(const RootedDigraph& g, const std::vector<VertexId>& order) {
  json names = json::array();
  for (VertexId v : order) names.push_back(g.name(v));
  return names;
}

std::vector<VertexId> parse_order(const RootedDigraph& g, const std::string& spec) {
  std::vector<VertexId> order;
  std::istringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw input_error("empty vertex id in --order");
    order.push_back(g.index_of(token));
  }
  return order;
}

std::vector<VertexId> shuffled_order(const RootedDigraph& g, std::uint64_t seed) {
  std::vector<VertexId> order = default_order(g);
  std::mt19937_64 rng(seed);
  for (size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng() % i]);
  return order;
}

int brute_edge_bound(std::optional<int> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("FLAMES_MAX_BRUTE_EDGES")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw input_error("FLAMES_MAX_BRUTE_EDGES is not a number");
    }
  }
  return kDefaultGreedoidEdgeBound;
}

int run_lambda(const std::string& path) {
  LoadedGraph in = load_graph(path, Mode::integral);
  Report report{"lambda", path, in.digest};
  report.warnings = in.warnings;
  report.vertex_index = vertex_index_json(in.graph);
  auto t0 = std::chrono::steady_clock::now();
  auto table = lambda_all(in.graph, in.capacities);
  report.result = {{"lambda", lambda_table_json(in.graph, table)}};
  auto t1 = std::chrono::steady_clock::now();
  report.print(std::chrono::duration<double, std::milli>(t1 - t0).count());
  return 0;
}

int run_extract(const std::string& path, const std::string& mode_flag,
                const std::string& order_flag, std::optional<std::uint64_t> seed,
                const std::string& emit_path) {
  std::string text = read_file(path);
  ParsedGraph parsed = parse_graph(text);
  Mode mode = resolve_mode(mode_flag, parsed.capacities);
  NormalizeResult norm = normalize(parsed.graph, parsed.capacities, mode);
  const RootedDigraph& g = norm.graph;

  std::vector<VertexId> order;
  if (!order_flag.empty())
    order = parse_order(g, order_flag);
  else if (seed)
    order = shuffled_order(g, *seed);
  else
    order = default_order(g);

  Report report{"extract", path, fnv1a_hex(text)};
  report.mode = mode == Mode::integral ? "integral" : "fractional";
  report.vertex_order = order_names(g, order);
  report.warnings = norm.warnings;
  report.vertex_index = vertex_index_json(g);

  auto t0 = std::chrono::steady_clock::now();
  CapacityVector f;
  ExtractionTrace trace;
  FlameReport check;
  json subgraph = nullptr;
  if (mode == Mode::integral) {
    IntegralExtraction ext = extract_flame_integral(g, norm.capacities, order);
    subgraph = ext.subgraph;
    f = std::move(ext.f);
    check = std::move(ext.report);
    trace = std::move(ext.trace);
  } else {
    std::tie(f, trace) = extract_flame(g, norm.capacities, order);
    check = verify(g, norm.capacities, f);
  }
  auto t1 = std::chrono::steady_clock::now();

  if (!check.is_flame || !check.preserves || !check.f_le_c ||
      (mode == Mode::integral && !check.integral))
    throw std::logic_error("extraction contract violated; this is a bug");

  std::string f_graph = serialize_graph(g, f);
  if (!emit_path.empty()) {
    std::ofstream out(emit_path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + emit_path + "'");
    out << f_graph;
  }

  report.result = {{"f", capacity_json(g, f)},
                   {"subgraph", subgraph},
                   {"trace", trace_json(g, trace)},
                   {"report", flame_report_json(g, check)},
                   {"f_graph", f_graph}};
  report.print(std::chrono::duration<double, std::milli>(t1 - t0).count());
  return 0;
}

int run_verify(const std::string& path, const std::string& against,
               const std::string& mode_flag) {
  std::string text = read_file(path);
  ParsedGraph parsed = parse_graph(text);
  Mode mode = resolve_mode(mode_flag, parsed.capacities);
  NormalizeResult norm = normalize(parsed.graph, parsed.capacities, mode);

  LoadedGraph fin = load_graph(against, mode);
  if (!norm.graph.same_structure(fin.graph))
    throw input_error("'" + against + "' is not a capacity vector over the same digraph");

  Report report{"verify", path, fnv1a_hex(text)};
  report.mode = mode == Mode::integral ? "integral" : "fractional";
  report.warnings = norm.warnings;
  for (const std::string& w : fin.warnings) report.warnings.push_back(w);
  report.vertex_index = vertex_index_json(norm.graph);

  auto t0 = std::chrono::steady_clock::now();
  FlameReport check = verify(norm.graph, norm.capacities, fin.capacities);
  auto t1 = std::chrono::steady_clock::now();

  report.result = {{"report", flame_report_json(norm.graph, check)}};
  report.print(std::chrono::duration<double, std::milli>(t1 - t0).count());
  return check.is_flame && check.preserves && check.f_le_c ? 0 : 1;
}

int run_greedoid_check(const std::string& path, std::optional<int> max_edges) {
  LoadedGraph in = load_graph(path, Mode::integral);
  Report report{"greedoid-check", path, in.digest};
  report.warnings = in.warnings;
  report.vertex_index = vertex_index_json(in.graph);

  auto t0 = std::chrono::steady_clock::now();
  GreedoidCheckReport check = check_greedoid_axioms(in.graph, brute_edge_bound(max_edges));
  auto t1 = std::chrono::steady_clock::now();

  bool ok = check.contains_empty && check.augmentation && check.accessible &&
            check.basis_sizes ==
                std::vector<int>{static_cast<int>(check.sum_lambda)};
  report.result = {{"report", greedoid_report_json(in.graph, check)},
                   {"greedoid", ok}};
  report.print(std::chrono::duration<double, std::milli>(t1 - t0).count());
  return ok ? 0 : 1;
}

int run_decompose(const std::string& path, const std::string& sink_name) {
  LoadedGraph in = load_graph(path, Mode::integral);
  VertexId sink = in.graph.index_of(sink_name);
  Report report{"decompose", path, in.digest};
  report.warnings = in.warnings;
  report.vertex_index = vertex_index_json(in.graph);

  auto t0 = std::chrono::steady_clock::now();
  Flow flow = max_flow(in.graph, in.capacities, sink);
  PathDecomposition pieces = decompose(in.graph, flow);
  auto t1 = std::chrono::steady_clock::now();

  CapacityVector resum;
  Rat path_total = 0;
  for (const auto& p : pieces.paths) {
    path_total += p.weight;
    for (EdgeId e : p.edges) resum.set(e, resum.get(e) + p.weight);
  }
  for (const auto& c : pieces.cycles)
    for (EdgeId e : c.edges) resum.set(e, resum.get(e) + c.weight);
  if (resum != flow.values || path_total != flow.amount)
    throw std::logic_error("decomposition does not re-sum to the flow; this is a bug");

  report.result = {{"sink", sink_name},
                   {"amount", rat_to_string(flow.amount)},
                   {"flow", capacity_json(in.graph, flow.values)},
                   {"decomposition", decomposition_json(in.graph, pieces)}};
  report.print(std::chrono::duration<double, std::milli>(t1 - t0).count());
  return 0;
}

int run_augment(const std::string& path, const std::string& flame_path,
                const std::string& vertex_name, bool fractional) {
  LoadedGraph in = load_graph(path, Mode::integral);
  LoadedGraph flame_in = load_graph(flame_path, Mode::integral);
  if (!in.graph.same_structure(flame_in.graph))
    throw input_error("'" + flame_path + "' is not a capacity vector over the same digraph");
  VertexId u = in.graph.index_of(vertex_name);

  Report report{"augment", path, in.digest};
  report.mode = fractional ? "fractional" : "integral";
  report.warnings = in.warnings;
  for (const std::string& w : flame_in.warnings) report.warnings.push_back(w);
  report.vertex_index = vertex_index_json(in.graph);

  auto t0 = std::chrono::steady_clock::now();
  AugmentationStep step{-1, std::nullopt, {}, u};
  CapacityVector augmented;
  if (fractional) {
    FractionalAugmentation aug =
        fractional_augment(in.graph, in.capacities, flame_in.capacities, u);
    VertexId head = in.graph.edge(aug.step.edge).head;
    if (!(lambda(in.graph, aug.augmented, head) ==
          lambda(in.graph, flame_in.capacities, head) + *aug.step.epsilon) ||
        !is_flame(in.graph, aug.augmented).first)
      throw std::logic_error("augmentation contract violated; this is a bug");
    step = std::move(aug.step);
    augmented = std::move(aug.augmented);
  } else {
    step = find_augmenting_edge(in.graph, in.capacities, flame_in.capacities, u);
    augmented = flame_in.capacities;
    augmented.set(step.edge, 1);
    VertexId head = in.graph.edge(step.edge).head;
    if (!is_flame(in.graph, augmented).first ||
        !is_coloop(in.graph, head, step.edge))
      throw std::logic_error("augmentation contract violated; this is a bug");
  }
  auto t1 = std::chrono::steady_clock::now();

  report.result = {{"step", augmentation_step_json(in.graph, step)},
                   {"augmented", capacity_json(in.graph, augmented)}};
  report.print(std::chrono::duration<double, std::milli>(t1 - t0).count());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flame extraction and greedoid checks for rooted capacitated digraphs"};
  app.require_subcommand(1);

  std::string lam_file;
  auto* lam = app.add_subcommand("lambda", "flow-connectivity table for all vertices");
  lam->add_option("file", lam_file, "input graph")->required();

  std::string ext_file, ext_mode, ext_order, ext_emit;
  std::optional<std::uint64_t> ext_seed;
  auto* ext = app.add_subcommand("extract", "peel the capacities down to a flame");
  ext->add_option("file", ext_file, "input graph")->required();
  ext->add_option("--mode", ext_mode, "integral|fractional (default: by capacities)")
      ->check(CLI::IsMember({"integral", "fractional"}));
  auto* order_opt = ext->add_option("--order", ext_order, "comma-separated vertex order");
  auto* seed_opt = ext->add_option("--shuffle-seed", ext_seed, "seeded random order");
  order_opt->excludes(seed_opt);
  ext->add_option("--emit-f", ext_emit, "also write f in graph format to this path");

  std::string ver_file, ver_against, ver_mode;
  auto* ver = app.add_subcommand("verify", "check the extraction contract for a given f");
  ver->add_option("file", ver_file, "input graph (the capacity c)")->required();
  ver->add_option("--against", ver_against, "graph file carrying f")->required();
  ver->add_option("--mode", ver_mode, "integral|fractional (default: by capacities)")
      ->check(CLI::IsMember({"integral", "fractional"}));

  std::string grd_file;
  std::optional<int> grd_max_edges;
  auto* grd = app.add_subcommand("greedoid-check",
                                 "exhaustively verify the flame greedoid axioms");
  grd->add_option("file", grd_file, "input graph")->required();
  grd->add_option("--max-edges", grd_max_edges,
                  "edge bound (default: FLAMES_MAX_BRUTE_EDGES or 12)");

  std::string dec_file, dec_sink;
  auto* dec = app.add_subcommand("decompose", "max flow plus path/cycle decomposition");
  dec->add_option("file", dec_file, "input graph")->required();
  dec->add_option("--sink", dec_sink, "target vertex")->required();

  std::string aug_file, aug_flame, aug_vertex;
  bool aug_fractional = false;
  auto* aug = app.add_subcommand("augment", "one certified augmentation step");
  aug->add_option("file", aug_file, "input graph")->required();
  aug->add_option("--flame", aug_flame, "graph file carrying the current flame")->required();
  aug->add_option("--vertex", aug_vertex, "deficit vertex")->required();
  aug->add_flag("--fractional", aug_fractional, "epsilon step instead of a unit edge");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (lam->parsed()) return run_lambda(lam_file);
    if (ext->parsed()) return run_extract(ext_file, ext_mode, ext_order, ext_seed, ext_emit);
    if (ver->parsed()) return run_verify(ver_file, ver_against, ver_mode);
    if (grd->parsed()) return run_greedoid_check(grd_file, grd_max_edges);
    if (dec->parsed()) return run_decompose(dec_file, dec_sink);
    if (aug->parsed()) return run_augment(aug_file, aug_flame, aug_vertex, aug_fractional);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const bound_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
