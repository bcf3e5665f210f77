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

#include <cstdint>
#include <span>
#include <vector>

namespace ecsynth::kernels {

/// Adjacency of a graph on n <= 24 vertices as one bitmask per vertex.
using MaskRows = std::span<const std::uint64_t>;

/// Cut-rank of every vertex subset, indexed by subset mask.
std::vector<std::uint8_t> cutrank_table_serial(MaskRows adj);
std::vector<std::uint8_t> cutrank_table_parallel(MaskRows adj);

/// Optimal decomposition width of every subset: for |S| = 1 the cut-rank,
/// otherwise max(cutrank(S), min over splits {A, S\A} of max(W(A), W(S\A))).
/// `split[S]` holds the chosen A, which always contains the lowest bit of S.
struct WidthTable {
  std::vector<std::uint8_t> width;
  std::vector<std::uint32_t> split;
};

WidthTable subset_width_serial(std::span<const std::uint8_t> cutranks,
                               unsigned n);
WidthTable subset_width_parallel(std::span<const std::uint8_t> cutranks,
                                 unsigned n);

}  // namespace ecsynth::kernels
