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
#include <limits>
#include <utility>
#include <vector>

#include "ecsynth/graph/graph.hpp"
#include "ecsynth/words/do_word.hpp"

namespace ecsynth {

struct TourEdge {
  Vertex a = 0;
  Vertex b = 0;

  bool loop() const { return a == b; }
  Vertex other(Vertex x) const { return x == a ? b : a; }
};

/// Multigraph with loops. Edge i of a word's tour graph joins letters i and
/// i+1 (cyclically).
struct TourGraph {
  std::size_t order = 0;
  std::vector<TourEdge> edges;

  /// Edge ids at each vertex in ascending order; loops are listed twice.
  std::vector<std::vector<std::size_t>> incidence() const;
  /// Degree counting loops twice.
  std::vector<std::size_t> degrees() const;
  bool four_regular() const;
  bool connected() const;
  /// Sorted (min, max) endpoint pairs, one per edge.
  std::vector<std::pair<Vertex, Vertex>> edge_multiset() const;
};

TourGraph tour_graph(const DOWord& w);

struct EulerCycle {
  /// Vertices in visiting order; the closing return to the start is omitted.
  std::vector<Vertex> letters;
  /// Edge ids in traversal order; edges[i] leaves letters[i].
  std::vector<std::size_t> edges;
};

/// Hierholzer walk of the component of `start` over edges not marked in
/// `forbidden`, always taking the lowest-index unused edge. Throws
/// PreconditionError if that component has a vertex of odd degree.
EulerCycle euler_cycle(const TourGraph& t, Vertex start, const std::vector<bool>& forbidden = {});

struct TourCycle {
  std::vector<Vertex> vertices;
  std::vector<std::size_t> edges;

  std::size_t length() const { return edges.size(); }
};

/// A shortest cycle; loops have length 1 and parallel pairs length 2. Ties go
/// to the lowest vertex, then the lowest edge ids.
TourCycle smallest_cycle(const TourGraph& t);

struct Reroute {
  DOWord word;
  Vertex vertex = 0;
  std::size_t cycle_length = 0;
};

/// Re-threads the Eulerian tour of w's tour graph so that the lowest vertex v
/// of a smallest cycle C has circle-graph degree at most |C| - 1. The new
/// word has the same tour graph. Throws GuardError when w has more than
/// `guard` letters.
Reroute reroute_word(const DOWord& w, std::size_t guard = std::numeric_limits<std::size_t>::max());

/// 2 * floor(log3(n + 1)).
std::size_t moore_degree_bound(std::size_t n);

}  // namespace ecsynth
