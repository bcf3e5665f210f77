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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecsynth/graph/graph.hpp"
#include "ecsynth/rankwidth/decomposition.hpp"

namespace ecsynth {

/// A vertex set whose cut-rank is below its size, with a certificate: the
/// cut-matrix row of `vertex` equals the sum of the rows of `combination`.
struct DependentSet {
  std::vector<Vertex> vertices;
  std::size_t cutrank_value = 0;
  Vertex vertex = 0;
  std::vector<Vertex> combination;
};

/// Computes cut-rank and witness for s (sorted internally), or nothing when
/// the rows are independent.
std::optional<DependentSet> make_dependent_set(const Graph& g, std::span<const Vertex> s);

/// True when `dep` is dependent in g and its witness checks out.
bool validate(const Graph& g, const DependentSet& dep);

/// Drops vertices greedily while |S| - cutrank(S) > 2, each time removing the
/// vertex that leaves the smallest cut-rank (lowest index on ties).
DependentSet shrink_dependent(const Graph& g, std::span<const Vertex> s);

enum class DependentStrategy { Auto, RankwidthGuided, CodeGuided, TrivialHalf };

std::string to_string(DependentStrategy s);
std::optional<DependentStrategy> parse_strategy(const std::string& name);

struct DependentSetOptions {
  DependentStrategy strategy = DependentStrategy::Auto;
  std::size_t max_n_exact = kExactRankWidthGuard;
  std::size_t max_n_code = 20;
};

/// The lowest floor(n/2)+1 vertices.
DependentSet trivial_half_set(const Graph& g);

/// Set of size r+1..2r from a balanced decomposition edge, then shrunk.
/// Falls back to the code-guided or trivial-half set when n < 3r.
DependentSet rankwidth_guided_set(const Graph& g, std::size_t max_n_exact,
                                  std::size_t max_n_code);

DependentSet find_dependent_set(const Graph& g, const DependentSetOptions& options = {});

}  // namespace ecsynth
