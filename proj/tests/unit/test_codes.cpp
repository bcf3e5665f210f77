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
#include <bit>
#include <unordered_map>

#include "ecsynth/codes/additive_code.hpp"
#include "ecsynth/error.hpp"
#include "ecsynth/rankwidth/cutrank.hpp"
#include "support/test_support.hpp"

using namespace ecsynth;
using ecsynth::testing::Rng;
using ecsynth::testing::uniform;

namespace {

/// Supports of all nonzero codewords of the graph code, as vertex masks.
std::vector<std::uint64_t> codeword_supports(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> out;
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << n); ++sub) {
    std::uint64_t x = sub;
    std::uint64_t z = 0;
    for (Vertex i = 0; i < n; ++i) {
      if (!((sub >> i) & 1)) continue;
      for (Vertex u = 0; u < n; ++u) {
        if (g.adjacent(i, u)) z ^= std::uint64_t{1} << u;
      }
    }
    out.push_back(x | z);
  }
  return out;
}

std::size_t brute_min_distance(const Graph& g) {
  std::size_t best = g.order();
  for (std::uint64_t s : codeword_supports(g)) {
    best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(s)));
  }
  return best;
}

std::size_t min_degree(const Graph& g) {
  std::size_t d = g.order();
  for (Vertex v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

}  // namespace

TEST_CASE("code_from_graph examples", "[codes]") {
  const AdditiveCode empty = code_from_graph(Graph(2));
  CHECK(empty.row_string(0) == "w0");
  CHECK(empty.row_string(1) == "0w");

  const AdditiveCode k2 = code_from_graph(Graph::complete(2));
  CHECK(k2.row_string(0) == "w1");
  CHECK(k2.row_string(1) == "1w");
  CHECK(k2.self_dual());
}

TEST_CASE("stabilizer rows map to code rows symbol by symbol", "[codes]") {
  // Rows XXII, IXXI, IIXX, ZYYZ with X = w, Z = 1, Y = w^2.
  const char* rows[] = {"XXII", "IXXI", "IIXX", "ZYYZ"};
  AdditiveCode c;
  c.n = 4;
  for (const char* r : rows) {
    f2::BitVector x(4);
    f2::BitVector z(4);
    for (std::size_t k = 0; k < 4; ++k) {
      x.set(k, r[k] == 'X' || r[k] == 'Y');
      z.set(k, r[k] == 'Z' || r[k] == 'Y');
    }
    c.x.push_back(x);
    c.z.push_back(z);
  }
  CHECK(c.row_string(0) == "ww00");
  CHECK(c.row_string(1) == "0ww0");
  CHECK(c.row_string(2) == "00ww");
  CHECK(c.row_string(3) == "1WW1");
  CHECK(c.self_dual());
  // Flipping one symbol breaks commutation with a neighbouring row.
  c.z[0].set(1);
  CHECK_FALSE(c.self_dual());
}

TEST_CASE("graph codes are self-dual", "[codes][property]") {
  Rng rng(51);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = ecsynth::testing::random_graph(rng, uniform(rng, 1, 20));
    REQUIRE(code_from_graph(g).self_dual());
  }
}

TEST_CASE("min_distance examples", "[codes]") {
  CHECK(min_distance(code_from_graph(Graph::complete(2))).distance == 2);
  for (std::size_t n = 1; n <= 6; ++n) {
    const MinDistance d = min_distance(code_from_graph(Graph(n)));
    CHECK(d.distance == 1);
    CHECK(d.support.size() == 1);
  }
  CHECK_THROWS_AS(min_distance(code_from_graph(Graph(23))), GuardError);
  CHECK_THROWS_AS(min_distance(AdditiveCode{}), PreconditionError);
}

TEST_CASE("min_distance matches brute force", "[codes][property]") {
  Rng rng(52);
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = ecsynth::testing::random_graph(rng, uniform(rng, 1, 10), 0.4);
    const MinDistance d = min_distance(code_from_graph(g), kMinDistanceGuard, trial % 2 == 0);
    REQUIRE(d.distance == brute_min_distance(g));
    REQUIRE(d.support.size() == d.distance);
    // The reported generators really sum to a codeword with that support.
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t i : d.generators) {
      x ^= std::uint64_t{1} << i;
      for (Vertex u = 0; u < g.order(); ++u) {
        if (g.adjacent(i, u)) z ^= std::uint64_t{1} << u;
      }
    }
    std::uint64_t support = 0;
    for (Vertex v : d.support) support |= std::uint64_t{1} << v;
    REQUIRE((x | z) == support);
  }
}

TEST_CASE("a set is dependent iff it contains a codeword support, exhaustive n <= 5",
          "[codes][property]") {
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ecsynth::testing::pair_count(n));
         ++mask) {
      const Graph g = ecsynth::testing::graph_from_mask(n, mask);
      const auto supports = codeword_supports(g);
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const auto set = ecsynth::testing::mask_vertices(s, n);
        const bool dependent = cutrank(g, set) < set.size();
        const bool covers = std::any_of(supports.begin(), supports.end(),
                                        [&](std::uint64_t c) { return (c & ~s) == 0; });
        REQUIRE(dependent == covers);
        ++cases;
      }
    }
  }
  CHECK(cases >= 1000);
}

TEST_CASE("dependent_set_from_code examples", "[codes]") {
  const DependentSet e = dependent_set_from_code(Graph(3));
  CHECK(e.vertices.size() == 1);
  CHECK(e.cutrank_value == 0);

  const DependentSet k2 = dependent_set_from_code(Graph::complete(2));
  CHECK(k2.vertices.size() == 2);
  CHECK(k2.cutrank_value <= 1);
  CHECK(validate(Graph::complete(2), k2));
}

TEST_CASE("code supports are dependent sets", "[codes][property]") {
  Rng rng(53);
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = ecsynth::testing::random_graph(rng, uniform(rng, 1, 16), 0.4);
    const DependentSet dep = dependent_set_from_code(g);
    REQUIRE(validate(g, dep));
    REQUIRE(dep.vertices.size() == min_distance(code_from_graph(g)).distance);
  }
}

TEST_CASE("mind_bound examples", "[codes]") {
  CHECK(mind_bound(4) == 2);
  CHECK(mind_bound(5) == 3);
  CHECK(mind_bound(6) == 4);
  CHECK(mind_bound(11) == 5);
  CHECK(mind_bound(12) == 6);
  CHECK_THROWS_AS(mind_bound(0), PreconditionError);
}

TEST_CASE("minimum distance stays within the bound, random n <= 12", "[codes][property]") {
  Rng rng(54);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t n = uniform(rng, 1, 12);
    const Graph g = ecsynth::testing::random_graph(rng, n, uniform(rng, 1, 9) / 10.0);
    REQUIRE(min_distance(code_from_graph(g), kMinDistanceGuard, false).distance <= mind_bound(n));
  }
}

TEST_CASE("minimum distance stays within the bound, exhaustive n <= 7", "[codes][property]") {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto total = static_cast<std::int64_t>(std::uint64_t{1}
                                                 << ecsynth::testing::pair_count(n));
    const std::size_t bound = mind_bound(n);
    std::int64_t violations = 0;
#pragma omp parallel for reduction(+ : violations) schedule(static, 4096)
    for (std::int64_t mask = 0; mask < total; ++mask) {
      const Graph g = ecsynth::testing::graph_from_mask(n, static_cast<std::uint64_t>(mask));
      if (min_distance(code_from_graph(g), kMinDistanceGuard, false).distance > bound) {
        ++violations;
      }
    }
    INFO("n = " << n);
    REQUIRE(violations == 0);
  }
}

TEST_CASE("minimum distance is one plus the least degree over the LC orbit, exhaustive n <= 6",
          "[codes][property]") {
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << ecsynth::testing::pair_count(n);
    std::unordered_map<Graph, std::size_t, GraphHash> orbit_min;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const Graph g = ecsynth::testing::graph_from_mask(n, mask);
      if (!orbit_min.count(g)) {
        const auto orbit = lc_orbit(g);
        std::size_t m = n;
        for (const Graph& h : orbit) m = std::min(m, min_degree(h));
        for (const Graph& h : orbit) orbit_min.emplace(h, m);
      }
      REQUIRE(min_distance(code_from_graph(g), kMinDistanceGuard, false).distance ==
              1 + orbit_min.at(g));
      ++graphs;
    }
    REQUIRE(orbit_min.size() == total);
  }
  CHECK(graphs >= 1000);
}
