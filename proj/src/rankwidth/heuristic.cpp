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

#include <algorithm>

#include "ecsynth/error.hpp"
#include "ecsynth/rankwidth/cutrank.hpp"
#include "ecsynth/rankwidth/decomposition.hpp"

namespace ecsynth {

namespace {

void require_two(const Graph& g, const char* who) {
  if (g.order() < 2) throw PreconditionError(std::string(who) + " needs at least two vertices");
}

}  // namespace

RankDecomposition greedy_decomposition(const Graph& g) {
  require_two(g, "greedy_decomposition");
  const std::size_t n = g.order();
  f2::BitVector prefix(n);
  std::vector<Vertex> order;
  order.reserve(n);
  while (order.size() < n) {
    Vertex best = n;
    std::size_t best_rank = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (prefix.get(v)) continue;
      f2::BitVector next = prefix;
      next.set(v);
      const std::size_t r = cutrank(g, next);
      if (best == n || r < best_rank) {
        best = v;
        best_rank = r;
      }
    }
    prefix.set(best);
    order.push_back(best);
  }
  return RankDecomposition::caterpillar(order);
}

RankDecomposition pairing_decomposition(const Graph& g) {
  require_two(g, "pairing_decomposition");
  const std::size_t n = g.order();
  f2::BitVector active(n);
  for (Vertex v = 0; v < n; ++v) active.set(v);

  struct Removal {
    Vertex removed;
    Vertex partner;
  };
  std::vector<Removal> removals;
  for (std::size_t left = n; left > 2; --left) {
    const auto alive = active.ones();
    std::size_t best_rank = 3;
    Removal pick{n, n};
    for (std::size_t i = 0; i < alive.size() && best_rank > 0; ++i) {
      for (std::size_t j = i + 1; j < alive.size(); ++j) {
        const Vertex v = alive[i];
        const Vertex w = alive[j];
        f2::BitVector rv = g.neighbourhood(v) & active;
        f2::BitVector rw = g.neighbourhood(w) & active;
        rv.set(w, false);
        rw.set(v, false);
        const bool zv = !rv.any();
        const bool zw = !rw.any();
        const std::size_t r = zv && zw ? 0 : ((zv || zw || rv == rw) ? 1 : 2);
        if (r < best_rank) {
          best_rank = r;
          // A vertex with no other neighbours, or either of two twins, can
          // sit next to its partner without widening any cut.
          pick = zv ? Removal{v, w} : Removal{w, v};
          if (r == 0) break;
        }
      }
    }
    active.set(pick.removed, false);
    removals.push_back(pick);
  }

  using Node = RankDecomposition::Node;
  std::vector<std::vector<Node>> adj(n);
  std::vector<Node> leaf_of(n);
  for (Vertex v = 0; v < n; ++v) leaf_of[v] = v;
  const auto last = active.ones();
  adj[last[0]].push_back(last[1]);
  adj[last[1]].push_back(last[0]);
  for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
    const Node p = it->partner;
    const Node q = adj[p].front();
    const Node m = adj.size();
    adj.push_back({p, q, it->removed});
    adj[p] = {m};
    std::replace(adj[q].begin(), adj[q].end(), p, m);
    adj[it->removed] = {m};
  }
  return RankDecomposition(std::move(adj), std::move(leaf_of));
}

RankDecomposition heuristic_decomposition(const Graph& g) {
  RankDecomposition greedy = greedy_decomposition(g);
  RankDecomposition pairing = pairing_decomposition(g);
  return width(g, pairing) < width(g, greedy) ? pairing : greedy;
}

}  // namespace ecsynth
