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

#include "ecsynth/codes/additive_code.hpp"

#include <bit>

#include "ecsynth/error.hpp"
#include "ecsynth/kernels/codeword_scan.hpp"

namespace ecsynth {

bool AdditiveCode::self_dual() const {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (x[i].dot(z[j]) != z[i].dot(x[j])) return false;
    }
  }
  return true;
}

std::string AdditiveCode::row_string(std::size_t i) const {
  static constexpr char kSymbols[2][2] = {{'0', '1'}, {'w', 'W'}};
  std::string s;
  for (std::size_t k = 0; k < n; ++k) s.push_back(kSymbols[x.at(i).get(k)][z.at(i).get(k)]);
  return s;
}

AdditiveCode code_from_graph(const Graph& g) {
  AdditiveCode c;
  c.n = g.order();
  for (Vertex v = 0; v < c.n; ++v) {
    f2::BitVector xv(c.n);
    xv.set(v);
    c.x.push_back(std::move(xv));
    c.z.push_back(g.neighbourhood(v));
  }
  return c;
}

MinDistance min_distance(const AdditiveCode& code, std::size_t guard, bool parallel) {
  if (code.n == 0) throw PreconditionError("min_distance of an empty code is undefined");
  if (code.n > guard || code.n > f2::kWordBits) {
    throw GuardError("min_distance: length " + std::to_string(code.n) + " exceeds guard " +
                     std::to_string(guard));
  }
  std::vector<std::uint64_t> xs(code.n);
  std::vector<std::uint64_t> zs(code.n);
  for (std::size_t i = 0; i < code.n; ++i) {
    xs[i] = code.x[i].words()[0];
    zs[i] = code.z[i].words()[0];
  }
  const auto hit = parallel ? kernels::min_weight_codeword_parallel(xs, zs)
                            : kernels::min_weight_codeword_serial(xs, zs);
  MinDistance out;
  out.distance = hit.weight;
  for (std::uint64_t s = hit.x | hit.z; s; s &= s - 1) {
    out.support.push_back(static_cast<Vertex>(std::countr_zero(s)));
  }
  for (std::uint64_t s = hit.subset; s; s &= s - 1) {
    out.generators.push_back(static_cast<std::size_t>(std::countr_zero(s)));
  }
  return out;
}

DependentSet dependent_set_from_code(const Graph& g, std::size_t guard) {
  const MinDistance d = min_distance(code_from_graph(g), guard);
  auto dep = make_dependent_set(g, d.support);
  if (!dep) throw Error("codeword support is not a dependent set");
  return *dep;
}

std::size_t mind_bound(std::size_t n) {
  if (n == 0) throw PreconditionError("mind_bound needs n >= 1");
  return 2 * (n / 6) + (n % 6 == 5 ? 3 : 2);
}

}  // namespace ecsynth
