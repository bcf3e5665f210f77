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
#include <cstdint>
#include <string>
#include <vector>

#include "ecsynth/graph/op_trace.hpp"
#include "ecsynth/tableau/circuit.hpp"
#include "ecsynth/tableau/tableau.hpp"

namespace ecsynth {

/// Gates realizing local complementation at v on a graph state, up to a
/// Pauli: H S H on v and S on each neighbour.
std::vector<Gate> lc_gadget(std::size_t v, const std::vector<std::size_t>& neighbours);

/// H on every qubit, then one gadget per op. Qubits use the trace's
/// original numbering, ancillas included. A deletion becomes MEASZ followed
/// by ZIF on each neighbour it had just before.
Circuit trace_to_circuit(const OpTrace& trace);

struct Simulation {
  Tableau state;
  /// Circuit qubit held by each remaining tableau column.
  std::vector<std::size_t> live;
  /// Per circuit qubit: -1 if never measured, else the outcome.
  std::vector<int> outcomes;
};

/// Runs c from |0...0>. Measured qubits are traced out.
Simulation simulate(const Circuit& c, MeasurePolicy policy = MeasurePolicy::ForceZero,
                    std::uint64_t seed = 0);

struct GraphStateReport {
  /// Stabilizer group equals that of |g> up to signs.
  bool matrix_match = false;
  /// All graph-state generators carry sign +1.
  bool signs_match = false;
  /// Pauli (x part then z part) that maps the state onto |g> exactly.
  f2::BitVector correction;
  std::string detail;

  bool match() const { return matrix_match; }
};

GraphStateReport check_graph_state(const Tableau& t, const Graph& g);

/// Compiles, simulates and checks against g.
GraphStateReport verify_trace(const OpTrace& trace, const Graph& g,
                              MeasurePolicy policy = MeasurePolicy::ForceZero,
                              std::uint64_t seed = 0);

}  // namespace ecsynth
