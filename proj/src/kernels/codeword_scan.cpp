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

#include "ecsynth/kernels/codeword_scan.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <vector>

#include <omp.h>

#include "ecsynth/error.hpp"

namespace ecsynth::kernels {

namespace {

constexpr std::size_t kMaxGenerators = 40;

std::uint64_t gray(std::uint64_t k) { return k ^ (k >> 1); }

void check_inputs(std::span<const std::uint64_t> x, std::span<const std::uint64_t> z) {
  if (x.size() != z.size()) throw PreconditionError("generator halves differ in count");
  if (x.empty()) throw PreconditionError("codeword scan needs at least one generator");
  if (x.size() > kMaxGenerators) {
    throw GuardError("codeword scan supports at most " + std::to_string(kMaxGenerators) +
                     " generators");
  }
}

bool better(const CodewordHit& a, const CodewordHit& b) {
  return a.weight < b.weight || (a.weight == b.weight && a.step < b.step);
}

// Scans Gray steps [first, last) starting from the codeword of gray(first-1).
CodewordHit scan_range(std::span<const std::uint64_t> x, std::span<const std::uint64_t> z,
                       std::uint64_t first, std::uint64_t last) {
  std::uint64_t cx = 0;
  std::uint64_t cz = 0;
  for (std::uint64_t s = gray(first - 1); s; s &= s - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(s));
    cx ^= x[i];
    cz ^= z[i];
  }
  CodewordHit best{~0u, 0, 0, 0, 0};
  for (std::uint64_t k = first; k < last; ++k) {
    const auto i = static_cast<std::size_t>(std::countr_zero(k));
    cx ^= x[i];
    cz ^= z[i];
    const auto w = static_cast<unsigned>(std::popcount(cx | cz));
    if (w < best.weight) best = {w, gray(k), cx, cz, k};
  }
  return best;
}

}  // namespace

CodewordHit min_weight_codeword_serial(std::span<const std::uint64_t> x,
                                       std::span<const std::uint64_t> z) {
  check_inputs(x, z);
  return scan_range(x, z, 1, std::uint64_t{1} << x.size());
}

CodewordHit min_weight_codeword_parallel(std::span<const std::uint64_t> x,
                                         std::span<const std::uint64_t> z) {
  check_inputs(x, z);
  const std::uint64_t end = std::uint64_t{1} << x.size();
  const std::uint64_t chunks =
      std::min<std::uint64_t>(end - 1, static_cast<std::uint64_t>(omp_get_max_threads()) * 8);
  const std::uint64_t span = (end - 1 + chunks - 1) / chunks;
  std::vector<CodewordHit> partial(chunks, CodewordHit{~0u, 0, 0, 0, 0});
  const auto count = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < count; ++c) {
    const std::uint64_t first = 1 + static_cast<std::uint64_t>(c) * span;
    const std::uint64_t last = std::min(end, first + span);
    if (first < last) partial[static_cast<std::size_t>(c)] = scan_range(x, z, first, last);
  }
  CodewordHit best = partial.front();
  for (const CodewordHit& h : partial) {
    if (better(h, best)) best = h;
  }
  return best;
}

}  // namespace ecsynth::kernels
