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

#include <bit>

#include "ecsynth/codes/additive_code.hpp"
#include "ecsynth/error.hpp"
#include "ecsynth/kernels/codeword_scan.hpp"
#include "ecsynth/kernels/frontier.hpp"
#include "ecsynth/kernels/subset_dp.hpp"
#include "ecsynth/rankwidth/cutrank.hpp"
#include "ecsynth/rankwidth/decomposition.hpp"
#include "support/test_support.hpp"

using namespace ecsynth;
using ecsynth::testing::Rng;
using ecsynth::testing::uniform;

namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> rows(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex u : g.neighbours(v)) rows[v] |= std::uint64_t{1} << u;
  }
  return rows;
}

}  // namespace

TEST_CASE("cut-rank tables agree with the library and each other", "[kernels]") {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = uniform(rng, 1, 14);
    const Graph g = ecsynth::testing::random_graph(rng, n);
    const auto rows = adjacency_masks(g);
    const auto serial = kernels::cutrank_table_serial(rows);
    const auto parallel = kernels::cutrank_table_parallel(rows);
    REQUIRE(serial == parallel);
    REQUIRE(serial.size() == (std::size_t{1} << n));
    for (int probe = 0; probe < 40; ++probe) {
      const std::uint64_t s = uniform(rng, 0, serial.size() - 1);
      REQUIRE(serial[s] == cutrank(g, ecsynth::testing::mask_vertices(s, n)));
    }
  }
  const std::vector<std::uint64_t> too_big(25, 0);
  CHECK_THROWS_AS(kernels::cutrank_table_serial(too_big), GuardError);
}

TEST_CASE("subset width tables agree and witness their values", "[kernels]") {
  Rng rng(102);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = uniform(rng, 2, 11);
    const Graph g = ecsynth::testing::random_graph(rng, n);
    const auto cut = kernels::cutrank_table_serial(adjacency_masks(g));
    const auto serial = kernels::subset_width_serial(cut, static_cast<unsigned>(n));
    const auto parallel = kernels::subset_width_parallel(cut, static_cast<unsigned>(n));
    REQUIRE(serial.width == parallel.width);
    const std::uint32_t full = (1u << n) - 1;
    REQUIRE(serial.width[full] == exact_rankwidth(g).width);
    for (std::uint32_t s = 1; s <= full; ++s) {
      if (std::popcount(s) < 2) {
        REQUIRE(serial.width[s] == cut[s]);
        continue;
      }
      const std::uint32_t a = serial.split[s];
      REQUIRE(a != 0);
      REQUIRE((a & ~s) == 0);
      REQUIRE(a != s);
      REQUIRE(serial.width[s] ==
              std::max({serial.width[a], serial.width[s ^ a], cut[s]}));
    }
  }
  CHECK_THROWS_AS(kernels::subset_width_serial(std::vector<std::uint8_t>(3), 2),
                  PreconditionError);
}

TEST_CASE("Gray-code codeword scans agree and find the lightest codeword", "[kernels]") {
  Rng rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = uniform(rng, 1, 16);
    const Graph g = ecsynth::testing::random_graph(rng, n, 0.4);
    std::vector<std::uint64_t> x(n);
    const auto z = adjacency_masks(g);
    for (std::size_t i = 0; i < n; ++i) x[i] = std::uint64_t{1} << i;
    const auto serial = kernels::min_weight_codeword_serial(x, z);
    const auto parallel = kernels::min_weight_codeword_parallel(x, z);
    REQUIRE(serial.weight == parallel.weight);
    REQUIRE(serial.subset == parallel.subset);
    REQUIRE(serial.step == parallel.step);
    REQUIRE(serial.subset != 0);
    std::uint64_t cx = 0;
    std::uint64_t cz = 0;
    for (std::uint64_t s = serial.subset; s; s &= s - 1) {
      cx ^= x[static_cast<std::size_t>(std::countr_zero(s))];
      cz ^= z[static_cast<std::size_t>(std::countr_zero(s))];
    }
    REQUIRE(cx == serial.x);
    REQUIRE(cz == serial.z);
    REQUIRE(serial.weight == static_cast<unsigned>(std::popcount(cx | cz)));
    REQUIRE(serial.weight == min_distance(code_from_graph(g), kMinDistanceGuard, false).distance);
  }
  CHECK_THROWS_AS(kernels::min_weight_codeword_serial({}, {}), PreconditionError);
}

TEST_CASE("frontier expansion agrees serial and parallel", "[kernels]") {
  Rng rng(104);
  const std::size_t bits = 14;
  auto moves = [&](kernels::State s, std::vector<kernels::State>& out) {
    for (std::size_t k = 0; k < bits; ++k) out.push_back(s ^ (kernels::State{1} << k));
  };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::int8_t> dist(std::size_t{1} << bits, -1);
    std::vector<kernels::State> frontier;
    for (int i = 0; i < 500; ++i) {
      const auto s = static_cast<kernels::State>(uniform(rng, 0, dist.size() - 1));
      dist[s] = 0;
      frontier.push_back(s);
    }
    const auto serial = kernels::expand_frontier_serial<decltype(moves)>(frontier, dist, moves);
    const auto parallel =
        kernels::expand_frontier_parallel<decltype(moves)>(frontier, dist, moves);
    REQUIRE(serial == parallel);
    REQUIRE(std::is_sorted(serial.begin(), serial.end()));
    for (kernels::State s : serial) REQUIRE(dist[s] < 0);
  }
}
