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
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ecsynth/f2/bit_matrix.hpp"

namespace ecsynth {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph stored as a symmetric GF(2) adjacency matrix with
/// zero diagonal. Equality compares adjacency only; labels are cosmetic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges);
  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);
  /// Star with `leaves` leaves around center 0.
  static Graph star(std::size_t leaves);

  std::size_t order() const { return adj_.rows(); }

  bool adjacent(Vertex v, Vertex w) const;
  void add_edge(Vertex v, Vertex w);
  void remove_edge(Vertex v, Vertex w);
  void toggle_edge(Vertex v, Vertex w);
  /// Toggles {v,u} for every u set in `mask`. mask[v] must be clear.
  void toggle_star(Vertex v, const f2::BitVector& mask);
  void isolate(Vertex v);
  /// Toggles every pair of distinct vertices inside `set`.
  void complement_within(const f2::BitVector& set);
  /// Toggles every pair {x,y}, x in a, y in b, x != y, unless both x and y
  /// lie in a & b. Each such unordered pair is toggled exactly once.
  void complement_between(const f2::BitVector& a, const f2::BitVector& b);

  const f2::BitMatrix& adjacency() const { return adj_; }
  f2::BitVector neighbourhood(Vertex v) const { return adj_.row(check(v)); }
  std::vector<Vertex> neighbours(Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  Graph induced(std::span<const Vertex> keep) const;
  Graph without(Vertex v) const;
  bool connected() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  /// Label of v, or its decimal index when unlabeled.
  std::string label(Vertex v) const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

  std::size_t hash() const;

 private:
  Vertex check(Vertex v) const;

  f2::BitMatrix adj_;
  std::vector<std::string> labels_;
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const { return g.hash(); }
};

enum class OpKind { LC, EC1, EC2, EC3, Delete };

/// One trace entry. `w` is unused for LC and Delete.
struct GraphOp {
  OpKind kind = OpKind::LC;
  Vertex v = 0;
  Vertex w = 0;

  static GraphOp lc(Vertex v) { return {OpKind::LC, v, 0}; }
  static GraphOp ec1(Vertex v, Vertex w) { return {OpKind::EC1, v, w}; }
  static GraphOp ec2(Vertex v, Vertex w) { return {OpKind::EC2, v, w}; }
  static GraphOp ec3(Vertex v, Vertex w) { return {OpKind::EC3, v, w}; }
  static GraphOp del(Vertex v) { return {OpKind::Delete, v, 0}; }

  bool is_cost_one() const {
    return kind == OpKind::EC1 || kind == OpKind::EC2 || kind == OpKind::EC3;
  }
  bool binary() const { return is_cost_one(); }

  bool operator==(const GraphOp&) const = default;
};

std::string to_string(const GraphOp& op);

Graph local_complement(const Graph& g, Vertex v);
/// In-place variants used on hot paths.
void local_complement_in_place(Graph& g, Vertex v);
void apply_op_in_place(Graph& g, const GraphOp& op);

Graph apply_op(const Graph& g, const GraphOp& op);

/// tau_v tau_w tau_v on an edge {v,w}, without any label swap.
Graph pivot(const Graph& g, Vertex v, Vertex w);

/// Every labeled graph reachable from g by local complementations,
/// in discovery order (g first).
std::vector<Graph> lc_orbit(const Graph& g, std::size_t guard = 12);

}  // namespace ecsynth
