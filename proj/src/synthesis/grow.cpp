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

#include <algorithm>

#include "ecsynth/error.hpp"
#include "ecsynth/synthesis/synth.hpp"

namespace ecsynth {

GrowStep grow_vertex(const Graph& g, const DependentSet& dep) {
  if (!validate(g, dep)) throw PreconditionError("grow_vertex: dependent set does not validate");
  const Vertex v = dep.vertex;
  const f2::BitVector target = g.neighbourhood(v);

  // Every op below toggles only edges at v, so each w contributes N(w)\{v}
  // regardless of order.
  f2::BitVector sum(g.order());
  for (Vertex w : dep.combination) sum ^= g.neighbourhood(w);
  sum.set(v, false);

  GrowStep step;
  step.vertex = v;
  f2::BitVector built = sum;
  for (Vertex w : dep.combination) {
    if (target.get(w) != sum.get(w)) {
      step.ops.push_back(GraphOp::lc(w));
      step.ops.push_back(GraphOp::ec1(v, w));
      step.ops.push_back(GraphOp::lc(w));
      built.flip(w);
    } else {
      step.ops.push_back(GraphOp::ec2(v, w));
    }
    ++step.cost;
  }
  for (Vertex u : dep.vertices) {
    if (u == v || std::find(dep.combination.begin(), dep.combination.end(), u) !=
                      dep.combination.end()) {
      continue;
    }
    if (built.get(u) != target.get(u)) {
      step.ops.push_back(GraphOp::ec1(v, u));
      ++step.cost;
    }
  }
  return step;
}

}  // namespace ecsynth
