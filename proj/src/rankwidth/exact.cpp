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

#include <bit>
#include <functional>

#include "ecsynth/error.hpp"
#include "ecsynth/kernels/subset_dp.hpp"
#include "ecsynth/rankwidth/decomposition.hpp"

namespace ecsynth {

namespace {

std::vector<std::uint64_t> mask_rows(const Graph& g) {
  std::vector<std::uint64_t> rows(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex u : g.neighbours(v)) rows[v] |= std::uint64_t{1} << u;
  }
  return rows;
}

}  // namespace

RankWidthResult exact_rankwidth(const Graph& g, std::size_t guard, bool parallel) {
  const std::size_t n = g.order();
  if (n <= 1) return {0, std::nullopt};
  if (n > guard) {
    throw GuardError("exact_rankwidth: order " + std::to_string(n) + " exceeds guard " +
                     std::to_string(guard));
  }
  const auto rows = mask_rows(g);
  const auto cut = parallel ? kernels::cutrank_table_parallel(rows)
                            : kernels::cutrank_table_serial(rows);
  const auto table = parallel ? kernels::subset_width_parallel(cut, static_cast<unsigned>(n))
                              : kernels::subset_width_serial(cut, static_cast<unsigned>(n));

  using Node = RankDecomposition::Node;
  std::vector<std::vector<Node>> adj(n);
  std::vector<Node> leaf_of(n);
  for (Vertex v = 0; v < n; ++v) leaf_of[v] = v;
  auto link = [&](Node a, Node b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  std::function<Node(std::uint32_t)> build = [&](std::uint32_t s) -> Node {
    if (std::popcount(s) == 1) return static_cast<Node>(std::countr_zero(s));
    const Node x = adj.size();
    adj.emplace_back();
    const std::uint32_t a = table.split[s];
    link(x, build(a));
    link(x, build(s ^ a));
    return x;
  };
  const std::uint32_t full = (1u << n) - 1;
  const std::uint32_t top = table.split[full];
  link(build(top), build(full ^ top));
  return {table.width[full], RankDecomposition(std::move(adj), std::move(leaf_of))};
}

}  // namespace ecsynth
