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
#include <span>
#include <vector>

#include "ecsynth/f2/bit_matrix.hpp"
#include "ecsynth/graph/graph.hpp"

namespace ecsynth {

/// Indicator vector of `s`. Throws on duplicates or out-of-range vertices.
f2::BitVector vertex_mask(std::size_t n, std::span<const Vertex> s);

/// Bipartite adjacency matrix between s (rows, in the given order) and the
/// remaining vertices (columns, increasing).
struct CutMatrix {
  f2::BitMatrix matrix;
  std::vector<Vertex> rows;
  std::vector<Vertex> cols;
};

CutMatrix cut_matrix(const Graph& g, std::span<const Vertex> s);

std::size_t cutrank(const Graph& g, std::span<const Vertex> s);
std::size_t cutrank(const Graph& g, const f2::BitVector& members);

}  // namespace ecsynth
