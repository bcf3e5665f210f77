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

namespace ecsynth::kernels {

/// Lightest nonzero codeword of the binary span of generators (x[i], z[i]),
/// weighing each position by whether x or z is set there. Subsets are
/// visited in reflected Gray-code order; ties go to the earliest visit.
struct CodewordHit {
  unsigned weight = 0;
  std::uint64_t subset = 0;
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  /// Gray-code step at which the codeword was found (1-based).
  std::uint64_t step = 0;
};

CodewordHit min_weight_codeword_serial(std::span<const std::uint64_t> x,
                                       std::span<const std::uint64_t> z);
CodewordHit min_weight_codeword_parallel(std::span<const std::uint64_t> x,
                                         std::span<const std::uint64_t> z);

}  // namespace ecsynth::kernels
