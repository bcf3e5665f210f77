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

#include "ecsynth/synthesis/synth.hpp"

#include <algorithm>
#include <chrono>

#include "ecsynth/codes/additive_code.hpp"
#include "ecsynth/error.hpp"
#include "ecsynth/rankwidth/cutrank.hpp"

namespace ecsynth {

namespace {

constexpr std::size_t kHeuristicBoundsLimit = 64;

// Chooses the next dependent set for the rank-width strategy. A balanced set
// of size up to 2r is kept across removals while it stays larger than r and
// dependent, so one decomposition pays for several vertices.
class RankwidthPicker {
 public:
  RankwidthPicker(std::size_t max_n_exact, std::size_t max_n_code)
      : max_n_exact_(max_n_exact), max_n_code_(max_n_code) {}

  DependentSet next(const Graph& h, const std::vector<Vertex>& alive) {
    const std::size_t m = h.order();
    if (!carried_.empty()) {
      std::vector<Vertex> local;
      for (Vertex orig : carried_) {
        local.push_back(static_cast<Vertex>(
            std::find(alive.begin(), alive.end(), orig) - alive.begin()));
      }
      if (local.size() > batch_r_ && cutrank(h, local) < local.size()) {
        return shrink_dependent(h, local);
      }
      carried_.clear();
    }
    if (top_r_ && m < batch_threshold(*top_r_) && m <= max_n_code_) {
      return dependent_set_from_code(h);
    }
    RankDecomposition d;
    std::size_t w = 0;
    if (m <= max_n_exact_) {
      auto exact = exact_rankwidth(h, max_n_exact_);
      w = exact.width;
      d = std::move(*exact.decomposition);
    } else {
      d = heuristic_decomposition(h);
      w = width(h, d);
    }
    const std::size_t r = std::max<std::size_t>(1, w);
    if (!top_r_) top_r_ = r;
    if (m >= 3 * r && (m >= batch_threshold(*top_r_) || m > max_n_code_)) {
      auto edge = find_balanced_edge(d, r);
      batch_r_ = r;
      for (Vertex x : edge.leaves) carried_.push_back(alive[x]);
      return shrink_dependent(h, edge.leaves);
    }
    return m <= max_n_code_ ? dependent_set_from_code(h) : trivial_half_set(h);
  }

  void removed(Vertex orig) {
    carried_.erase(std::remove(carried_.begin(), carried_.end(), orig), carried_.end());
  }

 private:
  std::size_t max_n_exact_;
  std::size_t max_n_code_;
  std::optional<std::size_t> top_r_;
  std::vector<Vertex> carried_;
  std::size_t batch_r_ = 0;
};

}  // namespace

Bounds compute_bounds(const Graph& g, std::size_t max_n_exact) {
  Bounds b;
  const std::size_t n = g.order();
  b.upper_generic = bound_upper_generic(n);
  if (n <= 1) {
    b.rankwidth = 0;
    b.rankwidth_exact = true;
    return b;
  }
  if (n <= max_n_exact) {
    b.rankwidth = exact_rankwidth(g, max_n_exact).width;
    b.rankwidth_exact = true;
  } else if (n <= kHeuristicBoundsLimit) {
    b.rankwidth = width(g, heuristic_decomposition(g));
  }
  if (b.rankwidth) {
    b.upper_rankwidth = bound_upper_rankwidth(n, *b.rankwidth);
    if (b.rankwidth_exact && g.connected()) b.lower = bound_lower(n, *b.rankwidth);
  }
  return b;
}

SynthResult synth(const Graph& g, const SynthOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.order();
  DependentStrategy strategy = options.strategy;
  if (strategy == DependentStrategy::Auto) {
    strategy = n <= options.max_n_code ? DependentStrategy::CodeGuided
                                       : DependentStrategy::RankwidthGuided;
  }

  SynthResult res;
  res.strategy = to_string(strategy);
  res.per_vertex_costs.assign(n, 0);

  Graph h = g;
  std::vector<Vertex> alive(n);
  for (Vertex v = 0; v < n; ++v) alive[v] = v;
  RankwidthPicker picker(options.max_n_exact, options.max_n_code);
  std::vector<std::vector<GraphOp>> steps;

  while (h.order() > 2) {
    DependentSet dep;
    switch (strategy) {
      case DependentStrategy::RankwidthGuided:
        dep = picker.next(h, alive);
        break;
      case DependentStrategy::CodeGuided:
        dep = h.order() <= kMinDistanceGuard
                  ? dependent_set_from_code(h)
                  : rankwidth_guided_set(h, options.max_n_exact, options.max_n_code);
        break;
      default:
        dep = trivial_half_set(h);
        break;
    }
    const GrowStep grow = grow_vertex(h, dep);
    std::vector<GraphOp> ops = grow.ops;
    for (GraphOp& op : ops) {
      op.v = alive[op.v];
      if (op.binary()) op.w = alive[op.w];
    }
    steps.push_back(std::move(ops));
    const Vertex orig = alive[grow.vertex];
    res.per_vertex_costs[orig] = grow.cost;
    res.max_set_size = std::max(res.max_set_size, dep.vertices.size());
    res.removal_order.push_back(orig);
    picker.removed(orig);
    h = h.without(grow.vertex);
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(grow.vertex));
  }

  res.trace.vertices = n;
  res.trace.ancillas = 0;
  if (h.order() == 2 && h.adjacent(0, 1)) {
    res.trace.ops.push_back(GraphOp::ec1(alive[0], alive[1]));
    res.per_vertex_costs[alive[1]] = 1;
  }
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    res.trace.ops.insert(res.trace.ops.end(), it->begin(), it->end());
  }
  res.cost = res.trace.cost();
  if (options.compute_bounds) res.bounds = compute_bounds(g, options.max_n_exact);
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

CertificateReport certify(const Graph& g, const SynthResult& res, std::size_t max_n_exact) {
  CertificateReport rep;
  try {
    rep.replay_ok = replay(res.trace) == g;
    if (!rep.replay_ok) rep.replay_error = "replayed graph differs from target";
  } catch (const Error& e) {
    rep.replay_error = e.what();
  }
  const std::size_t n = g.order();
  rep.upper_generic = bound_upper_generic(n);
  rep.within_upper_generic = Rational(static_cast<std::int64_t>(res.cost)) <= rep.upper_generic;
  Bounds b = res.bounds;
  if (!b.rankwidth_exact && n >= 2 && n <= max_n_exact) b = compute_bounds(g, max_n_exact);
  if (g.connected() && n >= 2 && n <= max_n_exact && b.rankwidth_exact) {
    rep.lower_checked = true;
    rep.lower = bound_lower(n, *b.rankwidth);
    rep.lower_ok = res.cost >= *rep.lower;
  }
  rep.upper_rankwidth = b.upper_rankwidth;
  if (rep.upper_rankwidth) {
    rep.within_upper_rankwidth =
        Rational(static_cast<std::int64_t>(res.cost)) <= *rep.upper_rankwidth;
  }
  return rep;
}

}  // namespace ecsynth
