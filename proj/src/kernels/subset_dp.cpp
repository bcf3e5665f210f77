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

#include "ecsynth/kernels/subset_dp.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>

#include "ecsynth/error.hpp"

namespace ecsynth::kernels {

namespace {

constexpr unsigned kMaxOrder = 24;

unsigned checked_order(std::size_t n) {
  if (n > kMaxOrder) {
    throw GuardError("subset tables support at most " + std::to_string(kMaxOrder) +
                     " vertices");
  }
  return static_cast<unsigned>(n);
}

std::uint8_t cutrank_of(MaskRows adj, std::uint64_t full, std::uint64_t s) {
  std::array<std::uint64_t, 64> basis{};
  std::uint8_t r = 0;
  const std::uint64_t outside = full & ~s;
  for (std::uint64_t rest = s; rest; rest &= rest - 1) {
    std::uint64_t row = adj[static_cast<std::size_t>(std::countr_zero(rest))] & outside;
    while (row) {
      const int top = 63 - std::countl_zero(row);
      if (!basis[top]) {
        basis[top] = row;
        ++r;
        break;
      }
      row ^= basis[top];
    }
  }
  return r;
}

void solve_subset(std::uint32_t s, std::span<const std::uint8_t> cutranks,
                  WidthTable& t) {
  const std::uint32_t low = s & (~s + 1);
  const std::uint32_t rest = s ^ low;
  if (rest == 0) {
    t.width[s] = cutranks[s];
    t.split[s] = s;
    return;
  }
  std::uint8_t best = 0xff;
  std::uint32_t best_a = 0;
  std::uint32_t sub = (rest - 1) & rest;
  while (true) {
    const std::uint32_t a = low | sub;
    const std::uint8_t v = std::max(t.width[a], t.width[s ^ a]);
    if (v < best) {
      best = v;
      best_a = a;
      if (best <= cutranks[s]) break;
    }
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }
  t.width[s] = std::max(best, cutranks[s]);
  t.split[s] = best_a;
}

std::vector<std::vector<std::uint32_t>> layers(unsigned n) {
  std::vector<std::vector<std::uint32_t>> by_size(n + 1);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);
  }
  return by_size;
}

}  // namespace

std::vector<std::uint8_t> cutrank_table_serial(MaskRows adj) {
  const unsigned n = checked_order(adj.size());
  const std::uint64_t full = (1ULL << n) - 1;
  std::vector<std::uint8_t> out(std::size_t{1} << n);
  for (std::uint64_t s = 0; s < out.size(); ++s) out[s] = cutrank_of(adj, full, s);
  return out;
}

std::vector<std::uint8_t> cutrank_table_parallel(MaskRows adj) {
  const unsigned n = checked_order(adj.size());
  const std::uint64_t full = (1ULL << n) - 1;
  std::vector<std::uint8_t> out(std::size_t{1} << n);
  const auto total = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < total; ++s) {
    out[static_cast<std::size_t>(s)] = cutrank_of(adj, full, static_cast<std::uint64_t>(s));
  }
  return out;
}

WidthTable subset_width_serial(std::span<const std::uint8_t> cutranks, unsigned n) {
  checked_order(n);
  if (cutranks.size() != (std::size_t{1} << n)) {
    throw PreconditionError("cut-rank table size does not match 2^n");
  }
  WidthTable t{std::vector<std::uint8_t>(cutranks.size(), 0),
               std::vector<std::uint32_t>(cutranks.size(), 0)};
  for (const auto& layer : layers(n)) {
    for (std::uint32_t s : layer) solve_subset(s, cutranks, t);
  }
  return t;
}

WidthTable subset_width_parallel(std::span<const std::uint8_t> cutranks, unsigned n) {
  checked_order(n);
  if (cutranks.size() != (std::size_t{1} << n)) {
    throw PreconditionError("cut-rank table size does not match 2^n");
  }
  WidthTable t{std::vector<std::uint8_t>(cutranks.size(), 0),
               std::vector<std::uint32_t>(cutranks.size(), 0)};
  // Subsets of one size only read results for strictly smaller sizes.
  for (const auto& layer : layers(n)) {
    const auto count = static_cast<std::int64_t>(layer.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < count; ++i) {
      solve_subset(layer[static_cast<std::size_t>(i)], cutranks, t);
    }
  }
  return t;
}

}  // namespace ecsynth::kernels
