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

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include <omp.h>

namespace ecsynth::kernels {

using State = std::uint32_t;

/// One breadth-first expansion step over an implicit state graph. `moves`
/// is called as moves(state, out) and appends successor states to `out`.
/// Returns the sorted, duplicate-free successors whose `dist` entry is
/// negative (unvisited). `dist` is only read.
template <class Moves>
std::vector<State> expand_frontier_serial(std::span<const State> frontier,
                                          std::span<const std::int8_t> dist,
                                          const Moves& moves) {
  std::vector<State> out;
  std::vector<State> scratch;
  for (State s : frontier) {
    scratch.clear();
    moves(s, scratch);
    for (State t : scratch) {
      if (dist[t] < 0) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class Moves>
std::vector<State> expand_frontier_parallel(std::span<const State> frontier,
                                            std::span<const std::int8_t> dist,
                                            const Moves& moves) {
  const int threads = omp_get_max_threads();
  std::vector<std::vector<State>> local(static_cast<std::size_t>(threads));
  const auto count = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel
  {
    auto& out = local[static_cast<std::size_t>(omp_get_thread_num())];
    std::vector<State> scratch;
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < count; ++i) {
      scratch.clear();
      moves(frontier[static_cast<std::size_t>(i)], scratch);
      for (State t : scratch) {
        if (dist[t] < 0) out.push_back(t);
      }
    }
  }
  std::vector<State> out;
  for (auto& part : local) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ecsynth::kernels
