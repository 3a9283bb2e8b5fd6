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

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "flames/digraph.hpp"
#include "flames/oracle.hpp"
#include "support/fixtures.hpp"

using namespace flames;
using namespace flames::test;

TEST_CASE("parse_graph reads the text format") {
  auto parsed = parse_graph(
      "# a comment\n"
      "root r\n"
      "arc r a        # trailing comment\n"
      "arc a v 1/2\n"
      "\n"
      "arc r v 0.25\n");
  const RootedDigraph& g = parsed.graph;
  CHECK(g.vertex_count() == 3);
  CHECK(g.name(g.root()) == "r");
  REQUIRE(g.edge_count() == 3);
  CHECK(parsed.capacities.get(0) == 1);  // default capacity
  CHECK(parsed.capacities.get(1) == Rat(1, 2));
  CHECK(parsed.capacities.get(2) == Rat(1, 4));
  CHECK(g.edge(1).tail == g.index_of("a"));
  CHECK(g.edge(1).head == g.index_of("v"));
}

TEST_CASE("parse_graph rejects malformed input with line numbers") {
  auto error_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const input_error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(error_of("root r\narc a a\n").starts_with("line 2: loop arc"));
  CHECK(error_of("root r\narc r v nope\n").starts_with("line 2: malformed capacity"));
  CHECK(error_of("arc r v\nroot r\n").starts_with("line 1: arc before root"));
  CHECK(error_of("root r\nroot s\n").starts_with("line 2: second root"));
  CHECK(error_of("root r\nnode v\n").starts_with("line 2: unknown directive"));
  CHECK(error_of("root r\narc r\n").starts_with("line 2: arc needs"));
  CHECK(error_of("# nothing\n") == "missing root directive");
  CHECK(error_of("root r\narc r v 1 extra\n").starts_with("line 2: trailing"));
}

TEST_CASE("RootedDigraph validates its invariants") {
  CHECK_THROWS_AS(RootedDigraph({"r", "v"}, 0, {{0, 1, 1}}), input_error);  // loop
  CHECK_THROWS_AS(RootedDigraph({"r", "v"}, 0, {{0, 0, 1}, {0, 0, 1}}), input_error);
  CHECK_THROWS_AS(RootedDigraph({"r", "r"}, 0, {}), input_error);  // duplicate name
  CHECK_THROWS_AS(RootedDigraph({"r"}, 2, {}), input_error);       // bad root
}

TEST_CASE("normalize drops arcs into the root with a warning") {
  RootedDigraph g({"r", "a"}, 0, {{0, 1, 0}, {1, 0, 1}});
  CapacityVector c = CapacityVector::ones(g);
  NormalizeResult norm = normalize(g, c, Mode::integral);
  CHECK(norm.graph.edge_count() == 1);
  CHECK(norm.graph.edges()[0].id == 1);
  REQUIRE(norm.warnings.size() == 1);
  CHECK(norm.warnings[0].find("root") != std::string::npos);
  CHECK(norm.capacities.get(0) == 0);
  CHECK(norm.capacities.get(1) == 1);
}

TEST_CASE("fractional normalization merges parallel bundles") {
  RootedDigraph g({"r", "v"}, 0, {{0, 0, 1}, {1, 0, 1}});
  CapacityVector c;
  c.set(0, Rat(1, 2));
  c.set(1, Rat(1, 3));
  NormalizeResult norm = normalize(g, c, Mode::fractional);
  REQUIRE(norm.graph.edge_count() == 1);
  CHECK(norm.graph.edges()[0].id == 0);  // lowest id of the bundle survives
  CHECK(norm.capacities.get(0) == Rat(5, 6));
  CHECK(norm.provenance.at(0) == std::vector<EdgeId>{0, 1});
}

TEST_CASE("integral normalization preserves parallel edges") {
  auto [g, c] = fx4_par2();
  NormalizeResult norm = normalize(g, c, Mode::integral);
  CHECK(norm.graph.edge_count() == 2);
  CHECK(norm.warnings.empty());
  CHECK(norm.graph.same_structure(g));
}

TEST_CASE("normalize is idempotent") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    oracle::InstanceSpec spec;
    spec.vertices = 5;
    spec.edges = 10;
    spec.mode = oracle::CapacityMode::rational;
    spec.seed = seed;
    auto inst = oracle::gen_instance(spec);
    for (Mode mode : {Mode::integral, Mode::fractional}) {
      NormalizeResult once = normalize(inst.graph, inst.capacities, mode);
      NormalizeResult twice = normalize(once.graph, once.capacities, mode);
      CHECK(twice.graph.same_structure(once.graph));
      CHECK(twice.capacities == once.capacities);
      CHECK(twice.warnings.empty());
    }
  }
}

TEST_CASE("contract_set on the fixture examples") {
  auto [g2, c2] = fx2_skip();
  SECTION("FX2, U={b,v} into v") {
    auto [q, qc] = contract_set(g2, c2, {g2.index_of("b"), g2.index_of("v")},
                                g2.index_of("v"));
    CHECK(q.vertex_count() == 3);
    REQUIRE(q.edge_count() == 4);  // e3 (b->v) deleted
    CHECK_FALSE(q.has_edge(3));
    CHECK(q.edge(0).head == q.index_of("a"));                      // r->a
    CHECK(q.edge(1).head == q.index_of("v"));                      // a->v
    CHECK(q.edge(2).head == q.index_of("v"));                      // a->b retargeted
    CHECK(q.edge(2).tail == q.index_of("a"));
    CHECK(q.edge(4).tail == q.root());                             // r->v
    CHECK(qc.get(2) == 1);
  }
  SECTION("singleton contraction is the identity") {
    auto [q, qc] = contract_set(g2, c2, {g2.index_of("v")}, g2.index_of("v"));
    CHECK(q.same_structure(g2));
    CHECK(qc == c2);
  }
  SECTION("root in U is rejected") {
    CHECK_THROWS_AS(contract_set(g2, c2, {g2.root(), g2.index_of("a")}, g2.index_of("a")),
                    input_error);
    CHECK_THROWS_AS(contract_set(g2, c2, {g2.index_of("a")}, g2.index_of("b")),
                    input_error);
  }
}

TEST_CASE("contract_set on FX6 U={a,u}") {
  auto [g, c] = fx6_lemma5();
  auto [q, qc] = contract_set(g, c, {g.index_of("a"), g.index_of("u")}, g.index_of("u"));
  CHECK(q.vertex_count() == 2);
  REQUIRE(q.edge_count() == 2);
  CHECK_FALSE(q.has_edge(1));  // a->u deleted
  CHECK(q.edge(0).head == q.index_of("u"));
  CHECK(q.edge(2).head == q.index_of("u"));
}

TEST_CASE("contract_set preserves in-capacities of untouched sets") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    oracle::InstanceSpec spec;
    spec.vertices = 6;
    spec.edges = 12;
    spec.mode = oracle::CapacityMode::rational;
    spec.seed = 1000 + trial;
    auto inst = oracle::gen_instance(spec);
    const RootedDigraph& g = inst.graph;

    // random U avoiding the root, random `into`, random W in the quotient
    VertexSet u;
    for (VertexId v = 1; v < g.vertex_count(); ++v)
      if (rng() % 2) u.insert(v);
    if (u.empty()) u.insert(1 + static_cast<VertexId>(rng() % (g.vertex_count() - 1)));
    VertexId into = *std::next(u.begin(), rng() % u.size());
    auto [q, qc] = contract_set(g, inst.capacities, u, into);

    VertexSet w_quotient{q.index_of(g.name(into))};
    VertexSet w_original = u;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (v == g.root() || u.count(v)) continue;
      if (rng() % 2) {
        w_quotient.insert(q.index_of(g.name(v)));
        w_original.insert(v);
      }
    }
    CHECK(rho(q, qc, w_quotient) == rho(g, inst.capacities, w_original));
  }
}

TEST_CASE("edge ids survive operations with identical capacities") {
  auto [g, c] = fx2_skip();
  NormalizeResult norm = normalize(g, c, Mode::fractional);
  for (const Edge& e : norm.graph.edges()) {
    CHECK(g.has_edge(e.id));
    // FX2 has no parallels, so every kept edge keeps its capacity
    CHECK(norm.capacities.get(e.id) == c.get(e.id));
  }
  auto [q, qc] = contract_set(g, c, {g.index_of("b")}, g.index_of("b"));
  for (const Edge& e : q.edges()) CHECK(qc.get(e.id) == c.get(e.id));
}

TEST_CASE("serialize_graph round-trips") {
  auto [g, c] = fx5_frac();
  auto reparsed = parse_graph(serialize_graph(g, c));
  CHECK(reparsed.graph.same_structure(g));
  CHECK(reparsed.capacities == c);
}

TEST_CASE("CapacityVector behaves as a sparse nonnegative vector") {
  CapacityVector c;
  CHECK(c.get(5) == 0);
  c.set(5, Rat(1, 2));
  c.set(5, 0);  // setting to zero erases
  CHECK(c == CapacityVector{});
  CHECK_THROWS_AS(c.set(1, Rat(-1)), input_error);

  c.set(2, 1);
  CapacityVector d;
  d.set(2, 2);
  CHECK(c.leq(d));
  CHECK_FALSE(d.leq(c));
  CHECK(d.is_integral());
  d.set(3, Rat(1, 3));
  CHECK_FALSE(d.is_integral());
  CHECK(d.support() == std::vector<EdgeId>{2, 3});
}
