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
#include <string>
#include <vector>

#include "ecsynth/graph/graph.hpp"

namespace ecsynth {

/// Ordered operations building a graph from the empty graph on
/// `vertices + ancillas` vertices. Vertex indices in ops always refer to the
/// original numbering; deletions are resolved through a live index map.
struct OpTrace {
  std::size_t vertices = 0;
  std::size_t ancillas = 0;
  std::vector<GraphOp> ops;

  std::size_t initial_vertices() const { return vertices + ancillas; }
  std::size_t cost() const;

  void append(const OpTrace& other);
  bool operator==(const OpTrace&) const = default;
};

/// Observer called before each op with the current graph and the op already
/// translated to current indices.
using ReplayObserver =
    std::function<void(std::size_t step, const Graph& current,
                       const GraphOp& original, const GraphOp& translated)>;

/// Runs the trace from the empty graph. Throws ReplayError on a violated
/// precondition or when the final vertex count differs from `vertices`.
Graph replay(const OpTrace& trace, const ReplayObserver& observer = {});

std::string serialize_trace(const OpTrace& trace);
OpTrace parse_trace(const std::string& text);

}  // namespace ecsynth
