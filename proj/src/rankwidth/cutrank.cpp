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

#include "ecsynth/rankwidth/cutrank.hpp"

#include <array>
#include <bit>

#include "ecsynth/error.hpp"

namespace ecsynth {

f2::BitVector vertex_mask(std::size_t n, std::span<const Vertex> s) {
  f2::BitVector mask(n);
  for (Vertex v : s) {
    if (v >= n) {
      throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(n));
    }
    if (mask.get(v)) throw PreconditionError("vertex " + std::to_string(v) + " repeated");
    mask.set(v);
  }
  return mask;
}

CutMatrix cut_matrix(const Graph& g, std::span<const Vertex> s) {
  const f2::BitVector inside = vertex_mask(g.order(), s);
  CutMatrix out;
  out.rows.assign(s.begin(), s.end());
  out.cols = (~inside).ones();
  out.matrix = f2::BitMatrix(out.rows.size(), out.cols.size());
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    for (std::size_t j = 0; j < out.cols.size(); ++j) {
      if (g.adjacent(out.rows[i], out.cols[j])) out.matrix.set(i, j);
    }
  }
  return out;
}

std::size_t cutrank(const Graph& g, const f2::BitVector& members) {
  if (members.size() != g.order()) throw PreconditionError("vertex mask size mismatch");
  const f2::BitVector outside = ~members;
  if (g.order() <= f2::kWordBits) {
    const f2::Word out = outside.words().empty() ? 0 : outside.words()[0];
    std::array<f2::Word, f2::kWordBits> basis{};
    std::size_t r = 0;
    for (Vertex v : members.ones()) {
      f2::Word row = g.adjacency().row_words(v)[0] & out;
      while (row) {
        const int top = 63 - std::countl_zero(row);
        if (!basis[static_cast<std::size_t>(top)]) {
          basis[static_cast<std::size_t>(top)] = row;
          ++r;
          break;
        }
        row ^= basis[static_cast<std::size_t>(top)];
      }
    }
    return r;
  }
  const auto rows = members.ones();
  f2::BitMatrix m(rows.size(), g.order());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m.set_row(i, g.neighbourhood(rows[i]) & outside);
  }
  return f2::rank(m);
}

std::size_t cutrank(const Graph& g, std::span<const Vertex> s) {
  return cutrank(g, vertex_mask(g.order(), s));
}

}  // namespace ecsynth
