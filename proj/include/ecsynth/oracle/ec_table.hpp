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
#include <cstdint>
#include <vector>

#include "ecsynth/graph/graph.hpp"

namespace ecsynth {

/// Upper-triangle adjacency bits; pair (i, j) with i < j sits at bit
/// j(j-1)/2 + i.
using GraphCode = std::uint32_t;

inline constexpr std::size_t kOracleGuard = 6;
inline constexpr std::size_t kOracleMaxOrder = 7;

GraphCode encode_graph(const Graph& g);
Graph decode_graph(GraphCode code, std::size_t n);

/// Applies one operation to an encoded graph; EC3 on an adjacent pair
/// returns the input unchanged.
GraphCode apply_code(GraphCode code, std::size_t n, const GraphOp& op);

/// Minimal number of cost-one operations, with local complementation free,
/// from the empty graph to every labelled graph on n vertices.
struct EcTable {
  std::size_t n = 0;
  std::vector<std::int8_t> dist;

  int lookup(const Graph& g) const;
  /// Largest distance over all graphs.
  std::size_t max() const;
  /// histogram()[d] = number of labelled graphs at distance d.
  std::vector<std::size_t> histogram() const;
};

struct OracleOptions {
  std::size_t guard = kOracleGuard;
  bool parallel = true;
};

/// Breadth-first search in cost layers, each layer closed under local
/// complementation. Throws GuardError when n exceeds the guard or 7.
EcTable exact_ec_all(std::size_t n, const OracleOptions& options = {});

/// Table lookup; tables are built once per order and cached.
std::size_t exact_ec(const Graph& g, std::size_t guard = kOracleGuard);

/// Distances with one ancilla that is deleted at some point, free of cost.
struct AncillaCheck {
  std::size_t n = 0;
  std::size_t max_without = 0;
  std::size_t max_with = 0;
  /// Graphs whose distance drops when the ancilla is allowed.
  std::size_t improved = 0;
};

/// Runs for n <= 5.
AncillaCheck ancilla_cross_check(std::size_t n, bool parallel = true);

/// Known maximum over n-vertex graphs for n = 1..6.
std::size_t reference_max_ec(std::size_t n);

}  // namespace ecsynth
