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

#include "ecsynth/rankwidth/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ecsynth/error.hpp"
#include "ecsynth/rankwidth/cutrank.hpp"

namespace ecsynth {

RankDecomposition::RankDecomposition(std::vector<std::vector<Node>> adjacency,
                                     std::vector<Node> leaf_of_vertex)
    : adjacency_(std::move(adjacency)), leaf_of_(std::move(leaf_of_vertex)) {
  const std::size_t nodes = adjacency_.size();
  const std::size_t k = leaf_of_.size();
  auto fail = [](const std::string& why) {
    throw PreconditionError("invalid rank decomposition: " + why);
  };
  if (k == 0 && nodes != 0) fail("nodes without vertices");
  if (k >= 1 && nodes == 0) fail("vertices without nodes");
  if (k == 1 && nodes != 1) fail("a single vertex needs a single-node tree");

  std::size_t degree_sum = 0;
  for (Node x = 0; x < nodes; ++x) {
    const auto& nb = adjacency_[x];
    if (nb.size() > 3) fail("node " + std::to_string(x) + " has degree above three");
    std::set<Node> distinct(nb.begin(), nb.end());
    if (distinct.size() != nb.size()) fail("parallel tree edges");
    for (Node y : nb) {
      if (y >= nodes) fail("edge endpoint out of range");
      if (y == x) fail("self-loop in tree");
      const auto& back = adjacency_[y];
      if (std::find(back.begin(), back.end(), x) == back.end()) fail("asymmetric adjacency");
    }
    degree_sum += nb.size();
  }
  if (nodes > 0 && degree_sum / 2 != nodes - 1) fail("edge count is not nodes - 1");

  // Connectivity.
  if (nodes > 0) {
    std::vector<bool> seen(nodes, false);
    std::vector<Node> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const Node x = stack.back();
      stack.pop_back();
      for (Node y : adjacency_[x]) {
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
      }
    }
    if (count != nodes) fail("tree is disconnected");
  }

  vertex_of_.assign(nodes, std::nullopt);
  for (Vertex v = 0; v < k; ++v) {
    const Node x = leaf_of_[v];
    if (x >= nodes) fail("leaf node out of range");
    if (vertex_of_[x]) fail("two vertices share a leaf");
    if (adjacency_[x].size() > 1) fail("vertex mapped to an internal node");
    vertex_of_[x] = v;
  }
  for (Node x = 0; x < nodes; ++x) {
    if (adjacency_[x].size() <= 1 && !vertex_of_[x]) {
      fail("leaf " + std::to_string(x) + " carries no vertex");
    }
  }
}

RankDecomposition RankDecomposition::caterpillar(std::span<const Vertex> order) {
  const std::size_t n = order.size();
  std::vector<std::vector<Node>> adj;
  std::vector<Node> leaf_of(n);
  if (n == 0) return RankDecomposition(adj, leaf_of);
  adj.resize(n == 1 ? 1 : (n == 2 ? 2 : 2 * n - 2));
  for (std::size_t k = 0; k < n; ++k) {
    if (order[k] >= n) throw PreconditionError("caterpillar order is not a permutation");
    leaf_of[order[k]] = k;
  }
  auto link = [&](Node a, Node b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  if (n == 2) {
    link(0, 1);
  } else if (n >= 3) {
    // Leaves are nodes 0..n-1 in order; spine nodes n..2n-3.
    for (std::size_t i = 1; i + 1 < n; ++i) link(n + i - 1, i);
    link(n, 0);
    link(2 * n - 3, n - 1);
    for (std::size_t s = n; s + 1 < 2 * n - 2; ++s) link(s, s + 1);
  }
  return RankDecomposition(std::move(adj), std::move(leaf_of));
}

std::optional<Vertex> RankDecomposition::vertex_at(Node x) const {
  return vertex_of_.at(x);
}

std::vector<RankDecomposition::TreeEdge> RankDecomposition::edges() const {
  std::vector<TreeEdge> out;
  for (Node x = 0; x < adjacency_.size(); ++x) {
    for (Node y : adjacency_[x]) {
      if (x < y) out.push_back({x, y});
    }
  }
  return out;
}

std::vector<Vertex> RankDecomposition::side(Node from, Node toward) const {
  const auto& nb = adjacency_.at(from);
  if (std::find(nb.begin(), nb.end(), toward) == nb.end()) {
    throw PreconditionError("side: nodes are not adjacent");
  }
  std::vector<Vertex> out;
  std::vector<std::pair<Node, Node>> stack{{toward, from}};
  while (!stack.empty()) {
    auto [x, parent] = stack.back();
    stack.pop_back();
    if (vertex_of_[x]) out.push_back(*vertex_of_[x]);
    for (Node y : adjacency_[x]) {
      if (y != parent) stack.emplace_back(y, x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string RankDecomposition::to_newick() const {
  if (adjacency_.empty()) return ";";
  if (adjacency_.size() == 1) return std::to_string(*vertex_of_[0]) + ";";
  std::function<std::string(Node, Node)> render = [&](Node x, Node parent) {
    if (vertex_of_[x]) return std::to_string(*vertex_of_[x]);
    std::string s = "(";
    bool first = true;
    for (Node y : adjacency_[x]) {
      if (y == parent) continue;
      if (!first) s += ",";
      s += render(y, x);
      first = false;
    }
    return s + ")";
  };
  Node root = adjacency_.size();
  for (Node x = 0; x < adjacency_.size(); ++x) {
    if (!vertex_of_[x]) {
      root = x;
      break;
    }
  }
  if (root == adjacency_.size()) {
    return "(" + std::to_string(*vertex_of_[0]) + "," + std::to_string(*vertex_of_[1]) + ");";
  }
  return render(root, root) + ";";
}

std::size_t width(const Graph& g, const RankDecomposition& d) {
  if (d.vertex_count() != g.order()) {
    throw PreconditionError("decomposition has " + std::to_string(d.vertex_count()) +
                            " leaves but the graph has " + std::to_string(g.order()) +
                            " vertices");
  }
  std::size_t w = 0;
  for (const auto& e : d.edges()) {
    const auto s = d.side(e.a, e.b);
    w = std::max(w, cutrank(g, s));
  }
  return w;
}

BalancedEdge find_balanced_edge(const RankDecomposition& d, std::size_t r) {
  using Node = RankDecomposition::Node;
  const std::size_t n = d.vertex_count();
  if (r == 0) throw PreconditionError("find_balanced_edge needs r >= 1");
  if (n < 3 * r) {
    throw PreconditionError("find_balanced_edge needs at least 3r = " +
                            std::to_string(3 * r) + " leaves, got " + std::to_string(n));
  }
  Node a = d.node_count();
  for (Node x = 0; x < d.node_count(); ++x) {
    if (!d.is_leaf(x)) {
      a = x;
      break;
    }
  }
  if (a == d.node_count()) throw Error("find_balanced_edge: tree has no internal node");
  Node parent = a;
  while (true) {
    Node best = a;
    std::vector<Vertex> best_leaves;
    for (Node b : d.neighbours(a)) {
      if (b == parent) continue;
      auto leaves = d.side(a, b);
      if (best == a || leaves.size() > best_leaves.size() ||
          (leaves.size() == best_leaves.size() && b < best)) {
        best = b;
        best_leaves = std::move(leaves);
      }
    }
    if (best_leaves.size() <= 2 * r) {
      if (best_leaves.size() >= r + 1) return {a, best, std::move(best_leaves)};
      auto other = d.side(best, a);
      if (other.size() >= r + 1 && other.size() <= 2 * r) return {best, a, std::move(other)};
      throw Error("find_balanced_edge: no balanced edge found");
    }
    parent = a;
    a = best;
  }
}

}  // namespace ecsynth
