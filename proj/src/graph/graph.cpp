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

#include "ecsynth/graph/graph.hpp"

#include <deque>
#include <numeric>
#include <unordered_set>

#include "ecsynth/error.hpp"

namespace ecsynth {

Graph::Graph(std::size_t n) : adj_(n, n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u == v) throw PreconditionError("self-loop on vertex " + std::to_string(u));
    g.add_edge(u, v);
  }
  return g;
}

Graph Graph::from_edges(std::size_t n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph Graph::cycle(std::size_t n) {
  Graph g(n);
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Vertex Graph::check(Vertex v) const {
  if (v >= order()) {
    throw PreconditionError("vertex " + std::to_string(v) +
                            " out of range for graph of order " +
                            std::to_string(order()));
  }
  return v;
}

bool Graph::adjacent(Vertex v, Vertex w) const {
  return adj_.get(check(v), check(w));
}

void Graph::add_edge(Vertex v, Vertex w) {
  if (check(v) == check(w)) throw PreconditionError("self-loop on vertex " + std::to_string(v));
  adj_.set(v, w);
  adj_.set(w, v);
}

void Graph::remove_edge(Vertex v, Vertex w) {
  adj_.set(check(v), check(w), false);
  adj_.set(w, v, false);
}

void Graph::toggle_edge(Vertex v, Vertex w) {
  if (check(v) == check(w)) throw PreconditionError("self-loop on vertex " + std::to_string(v));
  adj_.flip(v, w);
  adj_.flip(w, v);
}

void Graph::toggle_star(Vertex v, const f2::BitVector& mask) {
  if (mask.get(check(v))) throw PreconditionError("toggle_star mask contains its center");
  adj_.xor_row(v, mask);
  for (Vertex u : mask.ones()) adj_.flip(u, v);
}

void Graph::isolate(Vertex v) { toggle_star(v, neighbourhood(v)); }

std::vector<Vertex> Graph::neighbours(Vertex v) const {
  return adj_.row(check(v)).ones();
}

std::size_t Graph::degree(Vertex v) const {
  return adj_.row(check(v)).popcount();
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (Vertex v = 0; v < order(); ++v) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbours(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  Graph g(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check(keep[i]);
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (adj_.get(keep[i], keep[j])) g.add_edge(i, j);
    }
  }
  if (!labels_.empty()) {
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (Vertex v : keep) labels.push_back(labels_[v]);
    g.labels_ = std::move(labels);
  }
  return g;
}

Graph Graph::without(Vertex v) const {
  check(v);
  std::vector<Vertex> keep;
  keep.reserve(order() - 1);
  for (Vertex u = 0; u < order(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced(keep);
}

bool Graph::connected() const {
  if (order() <= 1) return true;
  f2::BitVector seen(order());
  std::deque<Vertex> queue{0};
  seen.set(0);
  std::size_t count = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : neighbours(u)) {
      if (!seen.get(w)) {
        seen.set(w);
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count == order();
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != order()) {
    throw PreconditionError("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

std::string Graph::label(Vertex v) const {
  check(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::size_t Graph::hash() const {
  std::size_t h = 1469598103934665603ULL ^ order();
  for (Vertex r = 0; r < order(); ++r) {
    for (f2::Word w : adj_.row_words(r)) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ULL;
    }
  }
  return h;
}

std::string to_string(const GraphOp& op) {
  switch (op.kind) {
    case OpKind::LC:
      return "LC " + std::to_string(op.v);
    case OpKind::EC1:
      return "EC1 " + std::to_string(op.v) + " " + std::to_string(op.w);
    case OpKind::EC2:
      return "EC2 " + std::to_string(op.v) + " " + std::to_string(op.w);
    case OpKind::EC3:
      return "EC3 " + std::to_string(op.v) + " " + std::to_string(op.w);
    case OpKind::Delete:
      return "DEL " + std::to_string(op.v);
  }
  return "?";
}

void Graph::complement_within(const f2::BitVector& set) {
  if (set.size() != order()) throw PreconditionError("vertex mask size mismatch");
  for (Vertex u : set.ones()) {
    adj_.xor_row(u, set);
    adj_.flip(u, u);
  }
}

void Graph::complement_between(const f2::BitVector& a, const f2::BitVector& b) {
  if (a.size() != order() || b.size() != order()) {
    throw PreconditionError("vertex mask size mismatch");
  }
  const f2::BitVector both = a & b;
  const f2::BitVector either_not_both = (a | b) & ~both;
  // Partners of x: b when x is only in a, a when x is only in b, and
  // everything outside the intersection when x is in both.
  for (Vertex x : either_not_both.ones()) {
    adj_.xor_row(x, a.get(x) ? b : a);
  }
  for (Vertex x : both.ones()) adj_.xor_row(x, either_not_both);
}

void local_complement_in_place(Graph& g, Vertex v) {
  g.complement_within(g.neighbourhood(v));
}

Graph local_complement(const Graph& g, Vertex v) {
  Graph out = g;
  local_complement_in_place(out, v);
  return out;
}

namespace {

void check_pair(const Graph& g, const GraphOp& op) {
  if (op.v >= g.order() || op.w >= g.order()) {
    throw PreconditionError(to_string(op) + ": vertex out of range for order " +
                            std::to_string(g.order()));
  }
  if (op.v == op.w) throw PreconditionError(to_string(op) + ": vertices must differ");
}

}  // namespace

void apply_op_in_place(Graph& g, const GraphOp& op) {
  switch (op.kind) {
    case OpKind::LC:
      local_complement_in_place(g, op.v);
      return;
    case OpKind::EC1:
      check_pair(g, op);
      g.toggle_edge(op.v, op.w);
      return;
    case OpKind::EC2: {
      check_pair(g, op);
      f2::BitVector mask = g.neighbourhood(op.w);
      mask.set(op.v, false);
      g.toggle_star(op.v, mask);
      return;
    }
    case OpKind::EC3:
      check_pair(g, op);
      if (g.adjacent(op.v, op.w)) {
        throw PreconditionError(to_string(op) + ": EC3 requires a non-adjacent pair");
      }
      g.complement_between(g.neighbourhood(op.v), g.neighbourhood(op.w));
      return;
    case OpKind::Delete:
      g = g.without(op.v);
      return;
  }
}

Graph apply_op(const Graph& g, const GraphOp& op) {
  Graph out = g;
  apply_op_in_place(out, op);
  return out;
}

Graph pivot(const Graph& g, Vertex v, Vertex w) {
  if (v == w || !g.adjacent(v, w)) {
    throw PreconditionError("pivot requires an edge {" + std::to_string(v) + "," +
                            std::to_string(w) + "}");
  }
  Graph out = g;
  local_complement_in_place(out, v);
  local_complement_in_place(out, w);
  local_complement_in_place(out, v);
  return out;
}

std::vector<Graph> lc_orbit(const Graph& g, std::size_t guard) {
  if (g.order() > guard) {
    throw GuardError("lc_orbit: order " + std::to_string(g.order()) +
                     " exceeds guard " + std::to_string(guard));
  }
  std::vector<Graph> orbit{g};
  std::unordered_set<Graph, GraphHash> seen{g};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (Vertex v = 0; v < g.order(); ++v) {
      Graph next = local_complement(orbit[head], v);
      if (seen.insert(next).second) orbit.push_back(std::move(next));
    }
  }
  return orbit;
}

}  // namespace ecsynth
