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

// The six hand-sized fixtures used across the suites. Edge ids are 0-based
// in listing order (the file format would assign the same ids).

#include <string>
#include <vector>

#include "flames/digraph.hpp"
#include "flames/rational.hpp"

namespace flames::test {

struct Fixture {
  RootedDigraph graph;
  CapacityVector capacities;
};

// e0:r->a, e1:r->b, e2:a->v, e3:b->v, all unit
inline Fixture fx1_diamond() {
  RootedDigraph g({"r", "a", "b", "v"}, 0,
                  {{0, 0, 1}, {1, 0, 2}, {2, 1, 3}, {3, 2, 3}});
  return {g, CapacityVector::ones(g)};
}

// e0:r->a, e1:a->v, e2:a->b, e3:b->v, e4:r->v, all unit
inline Fixture fx2_skip() {
  RootedDigraph g({"r", "a", "b", "v"}, 0,
                  {{0, 0, 1}, {1, 1, 3}, {2, 1, 2}, {3, 2, 3}, {4, 0, 3}});
  return {g, CapacityVector::ones(g)};
}

// e0:r->a, e1:a->v, unit
inline Fixture fx3_chain() {
  RootedDigraph g({"r", "a", "v"}, 0, {{0, 0, 1}, {1, 1, 2}});
  return {g, CapacityVector::ones(g)};
}

// e0,e1: parallel r->v, unit
inline Fixture fx4_par2() {
  RootedDigraph g({"r", "v"}, 0, {{0, 0, 1}, {1, 0, 1}});
  return {g, CapacityVector::ones(g)};
}

// e0:r->a cap 1/2, e1:a->v cap 1, e2:r->v cap 1/3
inline Fixture fx5_frac() {
  RootedDigraph g({"r", "a", "v"}, 0, {{0, 0, 1}, {1, 1, 2}, {2, 0, 2}});
  CapacityVector c;
  c.set(0, Rat(1, 2));
  c.set(1, 1);
  c.set(2, Rat(1, 3));
  return {g, c};
}

// e0:r->a, e1:a->u, e2:r->u, unit
inline Fixture fx6_lemma5() {
  RootedDigraph g({"r", "a", "u"}, 0, {{0, 0, 1}, {1, 1, 2}, {2, 0, 2}});
  return {g, CapacityVector::ones(g)};
}

// The fixture's reference vector y = (1, 1, 0).
inline CapacityVector fx6_reference_y() {
  CapacityVector y;
  y.set(0, 1);
  y.set(1, 1);
  return y;
}

inline CapacityVector make_caps(std::vector<Rat> values) {
  CapacityVector c;
  for (size_t i = 0; i < values.size(); ++i) c.set(static_cast<EdgeId>(i), values[i]);
  return c;
}

}  // namespace flames::test
