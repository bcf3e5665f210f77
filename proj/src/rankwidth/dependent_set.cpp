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

#include "ecsynth/rankwidth/dependent_set.hpp"

#include <algorithm>

#include "ecsynth/codes/additive_code.hpp"
#include "ecsynth/error.hpp"
#include "ecsynth/rankwidth/cutrank.hpp"

namespace ecsynth {

std::optional<DependentSet> make_dependent_set(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  const CutMatrix cm = cut_matrix(g, sorted);
  const auto dep = f2::find_dependent_row(cm.matrix);
  if (!dep) return std::nullopt;
  DependentSet out;
  out.vertices = sorted;
  out.cutrank_value = f2::rank(cm.matrix);
  out.vertex = sorted[dep->row];
  for (std::size_t i : dep->combination) out.combination.push_back(sorted[i]);
  return out;
}

bool validate(const Graph& g, const DependentSet& dep) {
  const auto& s = dep.vertices;
  if (s.empty() || !std::is_sorted(s.begin(), s.end()) ||
      std::adjacent_find(s.begin(), s.end()) != s.end() || s.back() >= g.order()) {
    return false;
  }
  const std::size_t cr = cutrank(g, s);
  if (cr != dep.cutrank_value || cr >= s.size()) return false;
  if (!std::binary_search(s.begin(), s.end(), dep.vertex)) return false;
  f2::BitVector outside = ~vertex_mask(g.order(), s);
  f2::BitVector sum(g.order());
  std::vector<Vertex> seen;
  for (Vertex w : dep.combination) {
    if (w == dep.vertex || !std::binary_search(s.begin(), s.end(), w)) return false;
    if (std::find(seen.begin(), seen.end(), w) != seen.end()) return false;
    seen.push_back(w);
    sum ^= g.neighbourhood(w);
  }
  return ((sum ^ g.neighbourhood(dep.vertex)) & outside).any() == false;
}

DependentSet shrink_dependent(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> cur(s.begin(), s.end());
  std::sort(cur.begin(), cur.end());
  std::size_t cr = cutrank(g, cur);
  if (cr >= cur.size()) {
    throw PreconditionError("shrink_dependent: set of size " + std::to_string(cur.size()) +
                            " has cut-rank " + std::to_string(cr));
  }
  while (cur.size() - cr > 2) {
    std::size_t best_index = cur.size();
    std::size_t best_rank = 0;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      std::vector<Vertex> next = cur;
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
      const std::size_t r = cutrank(g, next);
      if (best_index == cur.size() || r < best_rank) {
        best_index = i;
        best_rank = r;
      }
    }
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(best_index));
    cr = best_rank;
  }
  auto dep = make_dependent_set(g, cur);
  if (!dep) throw Error("shrink_dependent lost dependence");
  return *dep;
}

std::string to_string(DependentStrategy s) {
  switch (s) {
    case DependentStrategy::Auto:
      return "auto";
    case DependentStrategy::RankwidthGuided:
      return "rankwidth";
    case DependentStrategy::CodeGuided:
      return "code";
    case DependentStrategy::TrivialHalf:
      return "trivial";
  }
  return "?";
}

std::optional<DependentStrategy> parse_strategy(const std::string& name) {
  for (auto s : {DependentStrategy::Auto, DependentStrategy::RankwidthGuided,
                 DependentStrategy::CodeGuided, DependentStrategy::TrivialHalf}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

namespace {

void require_two(const Graph& g) {
  if (g.order() < 2) throw PreconditionError("dependent-set search needs at least two vertices");
}

}  // namespace

DependentSet trivial_half_set(const Graph& g) {
  require_two(g);
  std::vector<Vertex> s(g.order() / 2 + 1);
  for (Vertex v = 0; v < s.size(); ++v) s[v] = v;
  auto dep = make_dependent_set(g, s);
  if (!dep) throw Error("trivial-half set is independent");
  return *dep;
}

DependentSet rankwidth_guided_set(const Graph& g, std::size_t max_n_exact,
                                  std::size_t max_n_code) {
  require_two(g);
  const std::size_t n = g.order();
  RankDecomposition d;
  std::size_t w = 0;
  if (n <= max_n_exact) {
    auto exact = exact_rankwidth(g, max_n_exact);
    w = exact.width;
    d = std::move(*exact.decomposition);
  } else {
    d = heuristic_decomposition(g);
    w = width(g, d);
  }
  const std::size_t r = std::max<std::size_t>(1, w);
  if (n >= 3 * r) return shrink_dependent(g, find_balanced_edge(d, r).leaves);
  return n <= max_n_code ? dependent_set_from_code(g) : trivial_half_set(g);
}

DependentSet find_dependent_set(const Graph& g, const DependentSetOptions& options) {
  require_two(g);
  switch (options.strategy) {
    case DependentStrategy::Auto:
      return g.order() <= options.max_n_code
                 ? dependent_set_from_code(g)
                 : rankwidth_guided_set(g, options.max_n_exact, options.max_n_code);
    case DependentStrategy::RankwidthGuided:
      return rankwidth_guided_set(g, options.max_n_exact, options.max_n_code);
    case DependentStrategy::CodeGuided:
      return dependent_set_from_code(g);
    case DependentStrategy::TrivialHalf:
      return trivial_half_set(g);
  }
  throw Error("unknown strategy");
}

}  // namespace ecsynth
