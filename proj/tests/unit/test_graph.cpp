// Copyright 2026 The ecsynth Authors
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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <unordered_set>

#include "ecsynth/error.hpp"
#include "ecsynth/graph/graph.hpp"
#include "ecsynth/graph/graph_io.hpp"
#include "ecsynth/graph/op_trace.hpp"
#include "support/test_support.hpp"

using namespace ecsynth;
using ecsynth::testing::Rng;
using ecsynth::testing::uniform;

namespace {

bool well_formed(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.adjacent(v, v)) return false;
    for (Vertex w = 0; w < g.order(); ++w) {
      if (g.adjacent(v, w) != g.adjacent(w, v)) return false;
    }
  }
  return true;
}

GraphOp random_op(Rng& rng, const Graph& g) {
  const std::size_t n = g.order();
  const Vertex v = uniform(rng, 0, n - 1);
  Vertex w = uniform(rng, 0, n - 2);
  if (w >= v) ++w;
  switch (uniform(rng, 0, 3)) {
    case 0: return GraphOp::lc(v);
    case 1: return GraphOp::ec1(v, w);
    case 2: return GraphOp::ec2(v, w);
    default: return g.adjacent(v, w) ? GraphOp::ec2(w, v) : GraphOp::ec3(v, w);
  }
}

}  // namespace

TEST_CASE("local complementation examples", "[graph]") {
  // C4 with LC at vertex 2 gains the chord {1,3}.
  Graph diamond = Graph::cycle(4);
  diamond.add_edge(1, 3);
  CHECK(local_complement(Graph::cycle(4), 2) == diamond);

  // K4 with LC at v becomes the star centred at v.
  for (Vertex v = 0; v < 4; ++v) {
    const Graph h = local_complement(Graph::complete(4), v);
    CHECK(h.edge_count() == 3);
    CHECK(h.degree(v) == 3);
  }

  const Graph lone = Graph::from_edges(4, {{0, 1}, {1, 2}});
  CHECK(local_complement(lone, 3) == lone);
}

TEST_CASE("apply_op examples", "[graph]") {
  CHECK(apply_op(Graph(2), GraphOp::ec1(0, 1)) == Graph::complete(2));

  const Graph k2 = Graph::complete(2);
  CHECK(apply_op(k2, GraphOp::ec2(0, 1)) == k2);

  // Path 0 - 1 - 2: the only candidate pair for EC3(0, 2) is {1, 1}.
  const Graph p3 = Graph::path(3);
  CHECK(apply_op(p3, GraphOp::ec3(0, 2)) == p3);

  CHECK_THROWS_AS(apply_op(p3, GraphOp::ec3(0, 1)), PreconditionError);
  CHECK_THROWS_AS(apply_op(p3, GraphOp::ec1(0, 3)), PreconditionError);
  CHECK_THROWS_AS(apply_op(p3, GraphOp::ec1(1, 1)), PreconditionError);
  CHECK_THROWS_AS(local_complement(p3, 3), PreconditionError);

  const Graph d = apply_op(p3, GraphOp::del(1));
  CHECK(d.order() == 2);
  CHECK(d.edge_count() == 0);
  const Graph d0 = apply_op(p3, GraphOp::del(0));
  CHECK(d0 == Graph::complete(2));
}

TEST_CASE("operations agree with their set definitions", "[graph][property]") {
  Rng rng(21);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = uniform(rng, 2, 9);
    const Graph g = ecsynth::testing::random_graph(rng, n);
    const GraphOp op = random_op(rng, g);
    const Graph h = apply_op(g, op);
    REQUIRE(h == ecsynth::testing::definitional_op(g, op));
    REQUIRE(well_formed(h));
  }
}

TEST_CASE("LC, EC1 and EC2 are involutions", "[graph][property]") {
  Rng rng(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = uniform(rng, 2, 10);
    const Graph g = ecsynth::testing::random_graph(rng, n);
    const Vertex v = uniform(rng, 0, n - 1);
    Vertex w = uniform(rng, 0, n - 2);
    if (w >= v) ++w;
    REQUIRE(local_complement(local_complement(g, v), v) == g);
    REQUIRE(apply_op(apply_op(g, GraphOp::ec1(v, w)), GraphOp::ec1(v, w)) == g);
    REQUIRE(apply_op(apply_op(g, GraphOp::ec2(v, w)), GraphOp::ec2(v, w)) == g);
    if (!g.adjacent(v, w)) {
      const Graph h = apply_op(g, GraphOp::ec3(v, w));
      REQUIRE_FALSE(h.adjacent(v, w));
    }
  }
}

TEST_CASE("pivot examples", "[graph]") {
  const Graph k2 = Graph::complete(2);
  CHECK(pivot(k2, 0, 1) == k2);

  const Graph p3 = Graph::path(3);
  const Graph composed = local_complement(local_complement(local_complement(p3, 0), 1), 0);
  CHECK(pivot(p3, 0, 1) == composed);
  CHECK(pivot(pivot(p3, 0, 1), 0, 1) == p3);
  CHECK_THROWS_AS(pivot(p3, 0, 2), PreconditionError);
}

TEST_CASE("pivot is symmetric in its edge", "[graph][property]") {
  Rng rng(23);
  std::size_t checked = 0;
  while (checked < 1000) {
    const std::size_t n = uniform(rng, 2, 9);
    const Graph g = ecsynth::testing::random_graph(rng, n);
    const auto edges = g.edges();
    if (edges.empty()) continue;
    const auto [v, w] = edges[uniform(rng, 0, edges.size() - 1)];
    const Graph vwv = local_complement(local_complement(local_complement(g, v), w), v);
    const Graph wvw = local_complement(local_complement(local_complement(g, w), v), w);
    REQUIRE(pivot(g, v, w) == vwv);
    REQUIRE(vwv == wvw);
    ++checked;
  }
}

TEST_CASE("replay examples", "[graph][trace]") {
  OpTrace empty{3, 0, {}};
  CHECK(replay(empty) == Graph(3));

  OpTrace one{3, 0, {GraphOp::ec1(0, 1)}};
  CHECK(replay(one) == Graph::from_edges(3, {{0, 1}}));
  CHECK(one.cost() == 1);

  // Build C4 with four edge toggles, then LC at 2, 1, 2 yields the path
  // 0 - 2 - 1 - 3.
  OpTrace c4{4, 0, {GraphOp::ec1(0, 1), GraphOp::ec1(1, 2), GraphOp::ec1(2, 3), GraphOp::ec1(3, 0)}};
  CHECK(replay(c4) == Graph::cycle(4));
  c4.ops.push_back(GraphOp::lc(2));
  c4.ops.push_back(GraphOp::lc(1));
  c4.ops.push_back(GraphOp::lc(2));
  CHECK(replay(c4) == Graph::from_edges(4, {{0, 2}, {2, 1}, {1, 3}}));
  CHECK(c4.cost() == 4);
}

TEST_CASE("replay resolves deletions through original indices", "[graph][trace]") {
  // Ancilla 1 is deleted; vertex 2 keeps its original index in later ops.
  OpTrace t{2, 1, {GraphOp::ec1(0, 1), GraphOp::ec1(1, 2), GraphOp::lc(1), GraphOp::del(1),
                   GraphOp::ec1(0, 2)}};
  CHECK(replay(t) == Graph(2));
  CHECK(t.cost() == 3);

  OpTrace reuse{1, 1, {GraphOp::del(0), GraphOp::lc(0)}};
  CHECK_THROWS_AS(replay(reuse), ReplayError);
  OpTrace count{2, 1, {}};
  CHECK_THROWS_AS(replay(count), ReplayError);
}

TEST_CASE("replay reports the failing step", "[graph][trace]") {
  OpTrace t{3, 0, {GraphOp::ec1(0, 1), GraphOp::ec3(0, 1)}};
  try {
    replay(t);
    FAIL("expected a replay error");
  } catch (const ReplayError& e) {
    CHECK(e.step() == 1);
  }
}

TEST_CASE("trace text round trip", "[graph][trace]") {
  Rng rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    OpTrace t;
    t.vertices = uniform(rng, 2, 8);
    t.ancillas = uniform(rng, 0, 2);
    Graph shape(t.initial_vertices());
    for (int k = 0; k < 20; ++k) {
      const GraphOp op = random_op(rng, shape);
      t.ops.push_back(op);
    }
    const std::string text = serialize_trace(t);
    CHECK(text.rfind("TRACE n=", 0) == 0);
    REQUIRE(parse_trace(text) == t);
  }
  CHECK_THROWS_AS(parse_trace("EC1 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_trace("TRACE n=2 s=0\nEC9 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_trace("TRACE n=2 s=0\nEC1 0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_trace("TRACE n=2 s=0\nEC1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_trace("TRACE n=2 s=0\nLC 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_trace(""), ParseError);
  const OpTrace parsed = parse_trace("# comment\nTRACE n=2 s=0\n\nEC1 0 1  # edge\n");
  CHECK(parsed.ops.size() == 1);
}

TEST_CASE("lc_orbit examples", "[graph]") {
  CHECK(lc_orbit(Graph(4)).size() == 1);
  CHECK(lc_orbit(Graph::complete(2)).size() == 1);
  const auto orbit = lc_orbit(Graph::cycle(4));
  CHECK(orbit.front() == Graph::cycle(4));
  CHECK(std::find(orbit.begin(), orbit.end(), Graph::from_edges(4, {{0, 2}, {2, 1}, {1, 3}})) !=
        orbit.end());
  CHECK_THROWS_AS(lc_orbit(Graph(13)), GuardError);
}

TEST_CASE("lc_orbit is closed under local complementation", "[graph][property]") {
  Rng rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = uniform(rng, 1, 6);
    const Graph g = ecsynth::testing::random_graph(rng, n);
    const auto orbit = lc_orbit(g);
    const std::unordered_set<Graph, GraphHash> members(orbit.begin(), orbit.end());
    REQUIRE(members.size() == orbit.size());
    for (const Graph& h : orbit) {
      for (Vertex v = 0; v < n; ++v) REQUIRE(members.count(local_complement(h, v)) == 1);
    }
  }
}

TEST_CASE("edge list parsing", "[graph][io]") {
  const Graph p3 = parse_graph("3\n0 1\n1 2", GraphFormat::EdgeList);
  CHECK(p3 == Graph::path(3));
  const Graph one = parse_graph("1\n", GraphFormat::EdgeList);
  CHECK(one.order() == 1);
  CHECK(one.edge_count() == 0);
  CHECK(parse_graph("# header\n4\n\n0 3 # chord\n", GraphFormat::EdgeList) ==
        Graph::from_edges(4, {{0, 3}}));

  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_graph(text, GraphFormat::EdgeList);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("3\n0 1\n1 5\n") == 3);
  CHECK(line_of("3\n0 1\n1 1\n") == 3);
  CHECK(line_of("3\n0 1\n0 1\n") == 3);
  CHECK(line_of("x\n") == 1);
  CHECK(line_of("3\n0\n") == 2);
  CHECK(line_of("") == 1);
}

TEST_CASE("graph6 round trip over all 4-vertex graphs", "[graph][io]") {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Graph g = ecsynth::testing::graph_from_mask(4, mask);
    const std::string s = serialize_graph(g, GraphFormat::Graph6);
    REQUIRE(s.size() == 3);
    REQUIRE(s.back() == '\n');
    REQUIRE(s[0] == 'C');
    REQUIRE(parse_graph(s, GraphFormat::Graph6) == g);
    REQUIRE(sniff_graph_format(s) == GraphFormat::Graph6);
    const std::string e = serialize_graph(g, GraphFormat::EdgeList);
    REQUIRE(parse_graph(e, GraphFormat::EdgeList) == g);
    REQUIRE(sniff_graph_format(e) == GraphFormat::EdgeList);
  }
  // Standard encodings, one per line: K4 is "C~" and the empty 5-vertex graph "D??".
  CHECK(serialize_graph(Graph::complete(4), GraphFormat::Graph6) == "C~\n");
  CHECK(serialize_graph(Graph(5), GraphFormat::Graph6) == "D??\n");
  CHECK(parse_graph("D?{", GraphFormat::Graph6) == Graph::from_edges(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
}

TEST_CASE("graph6 round trip for random larger graphs", "[graph][io]") {
  Rng rng(26);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = ecsynth::testing::random_graph(rng, uniform(rng, 0, 62));
    const std::string s = serialize_graph(g, GraphFormat::Graph6);
    REQUIRE(parse_graph(s, GraphFormat::Graph6) == g);
  }
  CHECK_THROWS_AS(parse_graph("C\x01", GraphFormat::Graph6), ParseError);
  CHECK_THROWS_AS(parse_graph("", GraphFormat::Graph6), ParseError);
}

TEST_CASE("graph utilities", "[graph]") {
  const Graph s = Graph::star(3);
  CHECK(s.order() == 4);
  CHECK(s.degree(0) == 3);
  CHECK(s.connected());
  CHECK_FALSE(Graph(2).connected());
  CHECK(Graph::complete(5).edge_count() == 10);
  const std::vector<Vertex> keep{1, 2, 3};
  CHECK(Graph::cycle(4).induced(keep) == Graph::path(3));
  CHECK(Graph::cycle(5).without(0) == Graph::path(4));
  CHECK_THROWS_AS(Graph::cycle(2), PreconditionError);
}
