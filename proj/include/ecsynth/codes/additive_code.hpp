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
#include <string>
#include <vector>

#include "ecsynth/f2/bit_matrix.hpp"
#include "ecsynth/graph/graph.hpp"
#include "ecsynth/rankwidth/dependent_set.hpp"

namespace ecsynth {

/// Additive code over GF(4) given by n generators. Each symbol is a bit pair
/// (x, z): 0 = (0,0), 1 = (0,1), w = (1,0), w^2 = (1,1).
struct AdditiveCode {
  std::size_t n = 0;
  std::vector<f2::BitVector> x;
  std::vector<f2::BitVector> z;

  /// Every pair of generators has vanishing symplectic product.
  bool self_dual() const;
  /// Generator row i as symbols "0", "1", "w", "W" (W = w^2).
  std::string row_string(std::size_t i) const;
};

/// Generator matrix wI + A.
AdditiveCode code_from_graph(const Graph& g);

struct MinDistance {
  std::size_t distance = 0;
  /// Support of the first lightest codeword in Gray-code order.
  std::vector<Vertex> support;
  /// Generators summed to form that codeword.
  std::vector<std::size_t> generators;
};

inline constexpr std::size_t kMinDistanceGuard = 22;

MinDistance min_distance(const AdditiveCode& code,
                         std::size_t guard = kMinDistanceGuard,
                         bool parallel = true);

/// Support of a minimum-weight codeword of the graph's code, which is always
/// a dependent set.
DependentSet dependent_set_from_code(const Graph& g,
                                     std::size_t guard = kMinDistanceGuard);

/// Known ceiling on the minimum distance of a self-dual additive code of
/// length n: 2*floor(n/6)+2, or 2*floor(n/6)+3 when n = 5 mod 6.
std::size_t mind_bound(std::size_t n);

}  // namespace ecsynth
