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

#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "ecsynth/error.hpp"
#include "ecsynth/oracle/ec_table.hpp"
#include "ecsynth/rankwidth/decomposition.hpp"
#include "ecsynth/synthesis/bounds.hpp"
#include "ecsynth/synthesis/synth.hpp"
#include "support/test_support.hpp"

using namespace ecsynth;
using ecsynth::testing::Rng;
using ecsynth::testing::uniform;

namespace {

std::vector<GraphOp> all_ops(std::size_t n) {
  std::vector<GraphOp> ops;
  for (Vertex v = 0; v < n; ++v) {
    ops.push_back(GraphOp::lc(v));
    for (Vertex w = 0; w < n; ++w) {
      if (w == v) continue;
      ops.push_back(GraphOp::ec1(v, w));
      ops.push_back(GraphOp::ec2(v, w));
      ops.push_back(GraphOp::ec3(v, w));
    }
  }
  return ops;
}

// 0-1 breadth-first search over Graph objects with the definitional moves.
std::unordered_map<Graph, std::size_t, GraphHash> brute_distances(std::size_t n) {
  std::unordered_map<Graph, std::size_t, GraphHash> dist;
  std::deque<std::pair<Graph, std::size_t>> queue{{Graph(n), 0}};
  const auto ops = all_ops(n);
  while (!queue.empty()) {
    auto [g, d] = queue.front();
    queue.pop_front();
    if (dist.count(g)) continue;
    dist.emplace(g, d);
    for (const GraphOp& op : ops) {
      if (op.kind == OpKind::EC3 && g.adjacent(op.v, op.w)) continue;
      const Graph h = ecsynth::testing::definitional_op(g, op);
      if (dist.count(h)) continue;
      if (op.kind == OpKind::LC) {
        queue.emplace_front(h, d);
      } else {
        queue.emplace_back(h, d + 1);
      }
    }
  }
  return dist;
}

const EcTable& table(std::size_t n) {
  static std::map<std::size_t, EcTable> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, exact_ec_all(n)).first;
  return it->second;
}

}  // namespace

TEST_CASE("graph codes round trip", "[oracle]") {
  Rng rng(91);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = uniform(rng, 1, kOracleMaxOrder);
    const Graph g = ecsynth::testing::random_graph(rng, n);
    REQUIRE(decode_graph(encode_graph(g), n) == g);
  }
  CHECK(encode_graph(Graph(5)) == 0);
  CHECK_THROWS_AS(encode_graph(Graph(8)), GuardError);
}

TEST_CASE("code moves agree with graph moves", "[oracle][property]") {
  Rng rng(92);
  std::size_t compared = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = uniform(rng, 2, kOracleMaxOrder);
    const Graph g = ecsynth::testing::random_graph(rng, n);
    const auto ops = all_ops(n);
    const GraphOp op = ops[uniform(rng, 0, ops.size() - 1)];
    Graph h;
    try {
      h = apply_op(g, op);
    } catch (const PreconditionError&) {
      continue;
    }
    REQUIRE(decode_graph(apply_code(encode_graph(g), n, op), n) == h);
    ++compared;
  }
  CHECK(compared >= 1000);
  CHECK_THROWS_AS(apply_code(0, 3, GraphOp::del(0)), PreconditionError);
}

TEST_CASE("oracle tables match a graph-level search, n <= 5", "[oracle]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto brute = brute_distances(n);
    const EcTable& t = table(n);
    REQUIRE(brute.size() == (std::size_t{1} << ecsynth::testing::pair_count(n)));
    for (const auto& [g, d] : brute) {
      REQUIRE(t.lookup(g) == static_cast<int>(d));
    }
  }
}

TEST_CASE("oracle maxima for small orders", "[oracle]") {
  CHECK(table(1).max() == 0);
  CHECK(table(2).max() == 1);
  CHECK(table(3).max() == 2);
  CHECK(table(4).max() == 3);
  CHECK(table(5).max() == 5);
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(table(n).max() == reference_max_ec(n));
    const auto h = table(n).histogram();
    CHECK(std::accumulate(h.begin(), h.end(), std::size_t{0}) ==
          (std::size_t{1} << ecsynth::testing::pair_count(n)));
    CHECK(h[0] == 1);
  }
  CHECK_THROWS_AS(reference_max_ec(7), PreconditionError);
}

TEST_CASE("serial and parallel oracle tables agree", "[oracle]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    OracleOptions serial;
    serial.parallel = false;
    REQUIRE(exact_ec_all(n, serial).dist == table(n).dist);
  }
}

TEST_CASE("oracle values for named graphs", "[oracle]") {
  CHECK(exact_ec(Graph(4)) == 0);
  CHECK(exact_ec(Graph::complete(2)) == 1);
  CHECK(exact_ec(Graph::cycle(3)) == 2);
  CHECK(exact_ec(Graph::cycle(4)) == 3);
  CHECK(exact_ec(Graph::path(4)) == 3);
  CHECK(exact_ec(Graph::cycle(5)) == 5);
  CHECK(exact_ec(Graph::star(4)) == 4);
  CHECK_THROWS_AS(exact_ec(Graph(7)), GuardError);
  CHECK_THROWS_AS(exact_ec_all(7), GuardError);
  CHECK_THROWS_AS(exact_ec_all(4, {3, true}), GuardError);
}

TEST_CASE("oracle distances are consistent with every move, n <= 5", "[oracle][property]") {
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    const EcTable& t = table(n);
    const auto ops = all_ops(n);
    for (GraphCode code = 0; code < t.dist.size(); ++code) {
      const Graph g = decode_graph(code, n);
      const int d = t.dist[code];
      REQUIRE(d <= static_cast<int>(g.edge_count()));
      for (const GraphOp& op : ops) {
        if (op.kind == OpKind::EC3 && g.adjacent(op.v, op.w)) continue;
        const int e = t.lookup(ecsynth::testing::definitional_op(g, op));
        if (op.kind == OpKind::LC) {
          REQUIRE(e == d);
        } else {
          REQUIRE(std::abs(e - d) <= 1);
        }
        ++checked;
      }
    }
  }
  CHECK(checked >= 1000);
}

TEST_CASE("synthesis costs and lower bounds bracket the oracle", "[oracle][property]") {
  Rng rng(93);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = uniform(rng, 2, 5);
    const Graph g = ecsynth::testing::random_graph(rng, n);
    const std::size_t d = static_cast<std::size_t>(table(n).lookup(g));
    if (g.connected()) {
      REQUIRE(d >= bound_lower(n, exact_rankwidth(g).width));
    }
    const SynthResult res = synth(g);
    if (res.trace.ancillas == 0) REQUIRE(res.cost >= d);
  }
}

TEST_CASE("ancilla cross-check", "[oracle]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const AncillaCheck c = ancilla_cross_check(n);
    CHECK(c.n == n);
    CHECK(c.max_without == table(n).max());
    CHECK(c.max_with <= c.max_without);
    CHECK(ancilla_cross_check(n, false).improved == c.improved);
  }
  CHECK_THROWS_AS(ancilla_cross_check(6), GuardError);
}

TEST_CASE("order six table", "[oracle][slow]") {
  const EcTable& t = table(6);
  CHECK(t.max() == 7);
  CHECK(t.max() == reference_max_ec(6));
  CHECK(t.lookup(Graph::cycle(6)) == 6);
  CHECK(exact_ec(Graph::cycle(6)) == 6);
  Rng rng(94);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = ecsynth::testing::random_graph(rng, 6);
    const Vertex v = uniform(rng, 0, 5);
    REQUIRE(t.lookup(local_complement(g, v)) == t.lookup(g));
    REQUIRE(t.lookup(g) <= static_cast<int>(g.edge_count()));
  }
}
