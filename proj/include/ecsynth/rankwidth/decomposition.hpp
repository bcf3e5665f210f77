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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecsynth/graph/graph.hpp"

namespace ecsynth {

/// Unrooted tree of maximum degree three whose leaves are in bijection with
/// the vertices of a graph.
class RankDecomposition {
 public:
  using Node = std::size_t;

  struct TreeEdge {
    Node a;
    Node b;
    bool operator==(const TreeEdge&) const = default;
  };

  RankDecomposition() = default;
  /// Validates shape and the leaf bijection; throws PreconditionError.
  RankDecomposition(std::vector<std::vector<Node>> adjacency,
                    std::vector<Node> leaf_of_vertex);

  /// Path-like decomposition: leaves hang off a spine in the given order.
  static RankDecomposition caterpillar(std::span<const Vertex> order);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t vertex_count() const { return leaf_of_.size(); }
  const std::vector<Node>& neighbours(Node x) const { return adjacency_.at(x); }
  bool is_leaf(Node x) const { return adjacency_.at(x).size() <= 1; }
  Node leaf(Vertex v) const { return leaf_of_.at(v); }
  std::optional<Vertex> vertex_at(Node x) const;

  std::vector<TreeEdge> edges() const;
  /// Vertices whose leaves lie on the `toward` side of edge {from, toward}.
  std::vector<Vertex> side(Node from, Node toward) const;

  /// Parenthesized leaf tree, e.g. "((0,1),(2,3));".
  std::string to_newick() const;

 private:
  std::vector<std::vector<Node>> adjacency_;
  std::vector<Node> leaf_of_;
  std::vector<std::optional<Vertex>> vertex_of_;
};

/// Largest cut-rank over the tree edges. Throws if d does not fit g.
std::size_t width(const Graph& g, const RankDecomposition& d);

struct RankWidthResult {
  std::size_t width = 0;
  /// Absent for graphs with fewer than two vertices.
  std::optional<RankDecomposition> decomposition;
};

inline constexpr std::size_t kExactRankWidthGuard = 13;

/// Optimal width by dynamic programming over vertex subsets.
RankWidthResult exact_rankwidth(const Graph& g,
                                std::size_t guard = kExactRankWidthGuard,
                                bool parallel = true);

/// Caterpillar built by appending, at each step, the vertex that keeps the
/// prefix cut-rank smallest (lowest index on ties).
RankDecomposition greedy_decomposition(const Graph& g);

/// Repeatedly sets aside one vertex of the pair {v,w} with the smallest
/// cut-rank and later reattaches it as the sibling leaf of its partner.
/// Optimal on graphs of rank-width at most one.
RankDecomposition pairing_decomposition(const Graph& g);

/// The narrower of the greedy and pairing decompositions (greedy on ties).
RankDecomposition heuristic_decomposition(const Graph& g);

/// Edge whose `inside` side holds between r+1 and 2r leaves.
struct BalancedEdge {
  RankDecomposition::Node outside;
  RankDecomposition::Node inside;
  std::vector<Vertex> leaves;
};

/// Descends from the lowest-index internal node into the largest child
/// subtree until it holds at most 2r leaves.
BalancedEdge find_balanced_edge(const RankDecomposition& d, std::size_t r);

}  // namespace ecsynth
