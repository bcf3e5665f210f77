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

#include "ecsynth/words/word_synth.hpp"

#include <algorithm>
#include <chrono>

#include "ecsynth/error.hpp"
#include "ecsynth/words/tour_graph.hpp"

namespace ecsynth {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void finish(SynthResult& res, std::size_t n, std::chrono::steady_clock::time_point start) {
  res.cost = res.trace.cost();
  res.bounds.upper_generic = bound_upper_generic(n);
  res.wall_seconds = seconds_since(start);
}

}  // namespace

std::size_t circle_cost_bound(std::size_t n) {
  return n == 0 ? 0 : moore_degree_bound(n) * (n - 1);
}

SynthResult synth_interval(const DOWord& w) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = w.order();
  SynthResult res;
  res.strategy = "interval";
  res.per_vertex_costs.assign(n, 0);
  res.trace.vertices = n;
  res.trace.ancillas = 1;
  const Vertex z = n;
  const auto& seq = w.letters();
  for (std::size_t t = 0; t + 2 < 2 * n; ++t) {
    const Vertex u = seq[t];
    if (w.first(u) == t) {
      // u joins z and every interval still open.
      res.trace.ops.push_back(GraphOp::lc(z));
      res.trace.ops.push_back(GraphOp::ec1(u, z));
      res.trace.ops.push_back(GraphOp::lc(z));
    } else {
      res.trace.ops.push_back(GraphOp::ec1(u, z));
    }
    ++res.per_vertex_costs[u];
  }
  res.trace.ops.push_back(GraphOp::del(z));
  finish(res, n, start);
  return res;
}

SynthResult synth_circle(const DOWord& w) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = w.order();
  SynthResult res;
  res.strategy = "circle";
  res.per_vertex_costs.assign(n, 0);
  res.trace.vertices = n;
  res.trace.ancillas = 0;

  DOWord word = w;
  Graph h = circle_graph(w);
  std::vector<Vertex> alive(n);
  for (Vertex v = 0; v < n; ++v) alive[v] = v;
  std::vector<std::vector<GraphOp>> steps;
  while (h.order() > 1) {
    const Reroute rr = reroute_word(word);
    const Graph rerouted = circle_graph(rr.word);
    std::vector<Vertex> s = rerouted.neighbours(rr.vertex);
    res.rerouted_degrees.push_back(s.size());
    s.push_back(rr.vertex);
    // Cut-rank is invariant under local complementation, so S stays
    // dependent in the target graph itself.
    const auto dep = make_dependent_set(h, s);
    if (!dep) throw Error("synth_circle: rerouted neighbourhood is not dependent");
    const GrowStep grow = grow_vertex(h, *dep);
    std::vector<GraphOp> ops = grow.ops;
    for (GraphOp& op : ops) {
      op.v = alive[op.v];
      if (op.binary()) op.w = alive[op.w];
    }
    steps.push_back(std::move(ops));
    const Vertex orig = alive[grow.vertex];
    res.per_vertex_costs[orig] = grow.cost;
    res.max_set_size = std::max(res.max_set_size, s.size());
    res.removal_order.push_back(orig);
    h = h.without(grow.vertex);
    word = word.without(grow.vertex);
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(grow.vertex));
  }
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    res.trace.ops.insert(res.trace.ops.end(), it->begin(), it->end());
  }
  finish(res, n, start);
  return res;
}

SynthResult synth_containment(const DOWord& w) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = w.order();
  const SynthResult interval = synth_interval(w);
  const SynthResult circle = synth_circle(w);

  SynthResult res;
  res.strategy = "containment";
  res.trace.vertices = n;
  res.trace.ancillas = n + 1;
  res.per_vertex_costs.assign(n, 0);
  for (GraphOp op : interval.trace.ops) {
    // The interval ancilla sits after the circle copies.
    if (op.v == n) op.v = 2 * n;
    if (op.binary() && op.w == n) op.w = 2 * n;
    res.trace.ops.push_back(op);
  }
  for (GraphOp op : circle.trace.ops) {
    op.v += n;
    if (op.binary()) op.w += n;
    res.trace.ops.push_back(op);
  }
  // Ascending order matters: each fold hands the copy's remaining neighbours
  // among later copies to v, and those edges are resolved when the later
  // copy is folded.
  for (Vertex v = 0; v < n; ++v) {
    res.trace.ops.push_back(GraphOp::ec2(v, n + v));
    res.trace.ops.push_back(GraphOp::del(n + v));
  }
  for (Vertex v = 0; v < n; ++v) {
    res.per_vertex_costs[v] = interval.per_vertex_costs[v] + circle.per_vertex_costs[v] + 1;
  }
  res.removal_order = circle.removal_order;
  res.rerouted_degrees = circle.rerouted_degrees;
  res.max_set_size = circle.max_set_size;
  finish(res, n, start);
  return res;
}

}  // namespace ecsynth
