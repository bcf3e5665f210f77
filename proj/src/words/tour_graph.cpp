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

#include "ecsynth/words/tour_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "ecsynth/error.hpp"

namespace ecsynth {

std::vector<std::vector<std::size_t>> TourGraph::incidence() const {
  std::vector<std::vector<std::size_t>> inc(order);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    inc.at(edges[e].a).push_back(e);
    inc.at(edges[e].b).push_back(e);
  }
  return inc;
}

std::vector<std::size_t> TourGraph::degrees() const {
  std::vector<std::size_t> deg(order, 0);
  for (const auto& e : edges) {
    ++deg.at(e.a);
    ++deg.at(e.b);
  }
  return deg;
}

bool TourGraph::four_regular() const {
  const auto deg = degrees();
  return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 4; });
}

bool TourGraph::connected() const {
  if (order == 0) return true;
  const auto inc = incidence();
  std::vector<bool> seen(order, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (std::size_t e : inc[x]) {
      const Vertex y = edges[e].other(x);
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == order;
}

std::vector<std::pair<Vertex, Vertex>> TourGraph::edge_multiset() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
  std::sort(out.begin(), out.end());
  return out;
}

TourGraph tour_graph(const DOWord& w) {
  TourGraph t;
  t.order = w.order();
  const auto& s = w.letters();
  for (std::size_t i = 0; i < s.size(); ++i) t.edges.push_back({s[i], s[(i + 1) % s.size()]});
  return t;
}

EulerCycle euler_cycle(const TourGraph& t, Vertex start, const std::vector<bool>& forbidden) {
  if (start >= t.order) throw PreconditionError("euler_cycle: start vertex out of range");
  if (!forbidden.empty() && forbidden.size() != t.edges.size()) {
    throw PreconditionError("euler_cycle: forbidden mask has the wrong size");
  }
  auto allowed = [&](std::size_t e) { return forbidden.empty() || !forbidden[e]; };
  const auto inc = t.incidence();

  // Parity check over the component reachable from start.
  std::vector<bool> seen(t.order, false);
  std::vector<Vertex> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    std::size_t deg = 0;
    for (std::size_t e : inc[x]) {
      if (!allowed(e)) continue;
      ++deg;
      const Vertex y = t.edges[e].other(x);
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
    if (deg % 2 != 0) {
      throw PreconditionError("euler_cycle: vertex " + std::to_string(x) + " has odd degree");
    }
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<bool> used(t.edges.size(), false);
  std::vector<std::size_t> next(t.order, 0);
  std::vector<std::pair<Vertex, std::size_t>> walk{{start, kNone}};
  std::vector<std::pair<Vertex, std::size_t>> done;
  while (!walk.empty()) {
    const Vertex x = walk.back().first;
    std::size_t& i = next[x];
    while (i < inc[x].size() && (used[inc[x][i]] || !allowed(inc[x][i]))) ++i;
    if (i < inc[x].size()) {
      const std::size_t e = inc[x][i];
      used[e] = true;
      walk.emplace_back(t.edges[e].other(x), e);
    } else {
      done.push_back(walk.back());
      walk.pop_back();
    }
  }
  std::reverse(done.begin(), done.end());
  EulerCycle out;
  for (std::size_t k = 0; k + 1 < done.size(); ++k) {
    out.letters.push_back(done[k].first);
    out.edges.push_back(done[k + 1].second);
  }
  return out;
}

namespace {

// Walk from x back to the BFS root along parent edges.
void climb(Vertex x, const std::vector<Vertex>& parent, const std::vector<std::size_t>& via,
           std::vector<Vertex>& verts, std::vector<std::size_t>& edges) {
  while (parent[x] != x) {
    verts.push_back(x);
    edges.push_back(via[x]);
    x = parent[x];
  }
}

}  // namespace

TourCycle smallest_cycle(const TourGraph& t) {
  for (Vertex v = 0; v < t.order; ++v) {
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      if (t.edges[e].a == v && t.edges[e].loop()) return {{v}, {e}};
    }
  }
  std::map<std::pair<Vertex, Vertex>, std::vector<std::size_t>> bundles;
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    const auto& ed = t.edges[e];
    bundles[{std::min(ed.a, ed.b), std::max(ed.a, ed.b)}].push_back(e);
  }
  for (const auto& [ends, ids] : bundles) {
    if (ids.size() >= 2) return {{ends.first, ends.second}, {ids[0], ids[1]}};
  }
  if (t.edges.empty()) throw PreconditionError("smallest_cycle: graph has no edges");

  // Simple graph from here on: BFS from every root. A shortest cycle through
  // the root always closes with two disjoint tree paths.
  const auto inc = t.incidence();
  TourCycle best;
  std::size_t best_len = std::numeric_limits<std::size_t>::max();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  for (Vertex root = 0; root < t.order; ++root) {
    std::vector<std::size_t> dist(t.order, kUnseen);
    std::vector<Vertex> parent(t.order);
    std::vector<std::size_t> via(t.order, kUnseen);
    std::deque<Vertex> queue{root};
    dist[root] = 0;
    parent[root] = root;
    std::size_t found = kUnseen;
    std::size_t close_edge = 0;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      if (2 * dist[x] + 1 >= std::min(found, best_len)) break;
      for (std::size_t e : inc[x]) {
        if (e == via[x]) continue;
        const Vertex y = t.edges[e].other(x);
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          via[y] = e;
          queue.push_back(y);
        } else {
          const std::size_t len = dist[x] + dist[y] + 1;
          if (len < found) {
            std::vector<Vertex> vx, vy;
            std::vector<std::size_t> ex, ey;
            climb(x, parent, via, vx, ex);
            climb(y, parent, via, vy, ey);
            std::vector<Vertex> all = vx;
            all.insert(all.end(), vy.begin(), vy.end());
            std::sort(all.begin(), all.end());
            if (std::adjacent_find(all.begin(), all.end()) != all.end()) continue;
            found = len;
            close_edge = e;
            best.vertices = {root};
            best.vertices.insert(best.vertices.end(), vx.rbegin(), vx.rend());
            best.vertices.insert(best.vertices.end(), vy.begin(), vy.end());
            best.edges.assign(ex.rbegin(), ex.rend());
            best.edges.push_back(close_edge);
            best.edges.insert(best.edges.end(), ey.begin(), ey.end());
          }
        }
      }
    }
    if (found < best_len) best_len = found;
  }
  if (best_len == std::numeric_limits<std::size_t>::max()) {
    throw Error("smallest_cycle: graph is acyclic");
  }
  return best;
}

std::size_t moore_degree_bound(std::size_t n) {
  std::size_t k = 0;
  for (std::size_t p = 3; p <= n + 1; p *= 3) ++k;
  return 2 * k;
}

Reroute reroute_word(const DOWord& w, std::size_t guard) {
  if (w.order() == 0) throw PreconditionError("reroute_word needs a non-empty word");
  if (w.length() > guard) {
    throw GuardError("reroute_word: word length " + std::to_string(w.length()) +
                     " exceeds guard " + std::to_string(guard));
  }
  const TourGraph t = tour_graph(w);
  const TourCycle c = smallest_cycle(t);
  const Vertex v = *std::min_element(c.vertices.begin(), c.vertices.end());

  std::vector<bool> blocked(t.edges.size(), false);
  for (std::size_t e : c.edges) blocked[e] = true;
  const EulerCycle first = euler_cycle(t, v, blocked);
  std::fill(blocked.begin(), blocked.end(), false);
  for (std::size_t e : first.edges) blocked[e] = true;
  const EulerCycle second = euler_cycle(t, v, blocked);
  if (first.edges.size() + second.edges.size() != t.edges.size()) {
    throw Error("reroute_word: the two tours do not cover the tour graph");
  }
  std::vector<Vertex> seq = first.letters;
  seq.insert(seq.end(), second.letters.begin(), second.letters.end());
  return {DOWord::from_ids(std::move(seq), w.names()), v, c.length()};
}

}  // namespace ecsynth
