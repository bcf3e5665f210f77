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

#include "ecsynth/synthesis/synth.hpp"
#include "ecsynth/words/do_word.hpp"

namespace ecsynth {

/// Sweeps the word with one ancilla z (index n) whose neighbourhood holds the
/// open intervals. Exactly 2n-2 cost-one ops, then z is deleted.
SynthResult synth_interval(const DOWord& w);

/// Repeatedly reroutes the word to expose a vertex of low circle-graph degree
/// and grows the vertex certified dependent by that neighbourhood. Cost is at
/// most 2 floor(log3(n+1)) (n-1).
SynthResult synth_circle(const DOWord& w);

/// Builds the interval graph on 0..n-1 (ancilla 2n) and the circle graph on
/// n..2n-1, then folds each copy n+v into v with EC2 and a deletion.
SynthResult synth_containment(const DOWord& w);

/// 2 floor(log3(n+1)) (n-1).
std::size_t circle_cost_bound(std::size_t n);

}  // namespace ecsynth
