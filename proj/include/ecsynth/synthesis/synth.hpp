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
#include <optional>
#include <string>
#include <vector>

#include "ecsynth/graph/graph.hpp"
#include "ecsynth/graph/op_trace.hpp"
#include "ecsynth/rankwidth/dependent_set.hpp"
#include "ecsynth/synthesis/bounds.hpp"

namespace ecsynth {

/// Operations that rebuild a graph from the same graph with the edges at
/// `vertex` removed.
struct GrowStep {
  Vertex vertex = 0;
  std::vector<GraphOp> ops;
  std::size_t cost = 0;
};

/// Inserts the witness vertex of `dep` using at most |S|-1 cost-one ops.
/// Ops refer to g's indices. Throws PreconditionError if dep is invalid.
GrowStep grow_vertex(const Graph& g, const DependentSet& dep);

struct Bounds {
  std::optional<std::size_t> rankwidth;
  bool rankwidth_exact = false;
  /// n + rw - 2; present only for connected graphs with exact rank-width.
  std::optional<std::size_t> lower;
  std::optional<Rational> upper_rankwidth;
  Rational upper_generic;
};

struct SynthOptions {
  DependentStrategy strategy = DependentStrategy::Auto;
  std::size_t max_n_exact = kExactRankWidthGuard;
  std::size_t max_n_code = 20;
  bool compute_bounds = true;
};

struct SynthResult {
  OpTrace trace;
  std::size_t cost = 0;
  /// Cost spent inserting each vertex, indexed by vertex.
  std::vector<std::size_t> per_vertex_costs;
  Bounds bounds;
  std::string strategy;
  double wall_seconds = 0.0;
  /// Largest dependent set used, and the vertices in removal order.
  std::size_t max_set_size = 0;
  std::vector<Vertex> removal_order;
  /// Word synthesizers only: degree of each exposed vertex after rerouting.
  std::vector<std::size_t> rerouted_degrees;
};

/// Peels vertices off g one dependent set at a time and emits the reverse
/// construction as a trace without ancillas.
SynthResult synth(const Graph& g, const SynthOptions& options = {});

Bounds compute_bounds(const Graph& g, std::size_t max_n_exact = kExactRankWidthGuard);

struct CertificateReport {
  bool replay_ok = false;
  std::string replay_error;
  bool lower_checked = false;
  std::optional<std::size_t> lower;
  bool lower_ok = true;
  std::optional<Rational> upper_rankwidth;
  bool within_upper_rankwidth = true;
  Rational upper_generic;
  bool within_upper_generic = true;

  /// Replay matches and no lower-bound violation. Upper-bound comparisons
  /// are informational.
  bool ok() const { return replay_ok && lower_ok; }
};

CertificateReport certify(const Graph& g, const SynthResult& res,
                          std::size_t max_n_exact = kExactRankWidthGuard);

/// key=value lines: n, cost, strategy, bounds and optionally wall time.
std::string format_stats(const Graph& g, const SynthResult& res,
                         const CertificateReport* report = nullptr,
                         bool include_timing = true);

}  // namespace ecsynth
