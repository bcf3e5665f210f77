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

#include <string>

#include "ecsynth/graph/graph.hpp"

namespace ecsynth {

enum class GraphFormat { EdgeList, Graph6 };

/// Edge list: first line n, then one zero-based "u v" pair per line.
/// Blank lines and '#' comments are ignored. graph6 supports n <= 62.
Graph parse_graph(const std::string& text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

/// Picks graph6 when the text is a single token without spaces that is not a
/// plain integer, else edge list.
GraphFormat sniff_graph_format(const std::string& text);

}  // namespace ecsynth
