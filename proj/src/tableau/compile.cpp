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

#include "ecsynth/tableau/compile.hpp"

#include <limits>
#include <random>

#include "ecsynth/error.hpp"

namespace ecsynth {

std::vector<Gate> lc_gadget(std::size_t v, const std::vector<std::size_t>& neighbours) {
  std::vector<Gate> out{Gate::h(v), Gate::s(v), Gate::h(v)};
  for (std::size_t u : neighbours) out.push_back(Gate::s(u));
  return out;
}

Circuit trace_to_circuit(const OpTrace& trace) {
  Circuit c{trace.initial_vertices(), {}};
  for (std::size_t q = 0; q < c.qubits; ++q) c.add(Gate::h(q));
  std::vector<std::size_t> alive(c.qubits);
  for (std::size_t q = 0; q < c.qubits; ++q) alive[q] = q;
  auto originals = [&](const Graph& g, Vertex current) {
    std::vector<std::size_t> out;
    for (Vertex u : g.neighbours(current)) out.push_back(alive[u]);
    return out;
  };
  replay(trace, [&](std::size_t, const Graph& g, const GraphOp& op, const GraphOp& local) {
    switch (op.kind) {
      case OpKind::EC1:
        c.add(Gate::cz(op.v, op.w));
        break;
      case OpKind::EC2:
        c.add(Gate::h(op.w));
        c.add(Gate::cz(op.v, op.w));
        c.add(Gate::h(op.w));
        break;
      case OpKind::EC3:
        c.add(Gate::h(op.v));
        c.add(Gate::h(op.w));
        c.add(Gate::cz(op.v, op.w));
        c.add(Gate::h(op.v));
        c.add(Gate::h(op.w));
        break;
      case OpKind::LC:
        for (const Gate& gate : lc_gadget(op.v, originals(g, local.v))) c.add(gate);
        break;
      case OpKind::Delete: {
        const auto nb = originals(g, local.v);
        c.add(Gate::measz(op.v));
        for (std::size_t u : nb) c.add(Gate::zif(u, op.v));
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(local.v));
        break;
      }
    }
  });
  return c;
}

Simulation simulate(const Circuit& c, MeasurePolicy policy, std::uint64_t seed) {
  validate(c);
  constexpr std::size_t kGone = std::numeric_limits<std::size_t>::max();
  Simulation sim;
  sim.state = Tableau::zero_state(c.qubits);
  sim.outcomes.assign(c.qubits, -1);
  sim.live.resize(c.qubits);
  std::vector<std::size_t> column(c.qubits);
  for (std::size_t q = 0; q < c.qubits; ++q) sim.live[q] = column[q] = q;
  std::mt19937_64 rng(seed);
  auto col = [&](std::size_t q) {
    if (column[q] == kGone) {
      throw PreconditionError("qubit " + std::to_string(q) + " used after measurement");
    }
    return column[q];
  };
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::MeasZ: {
        const std::size_t k = col(g.a);
        sim.outcomes[g.a] = sim.state.measure_z(k, policy, &rng).outcome ? 1 : 0;
        sim.live.erase(sim.live.begin() + static_cast<std::ptrdiff_t>(k));
        column[g.a] = kGone;
        for (std::size_t i = k; i < sim.live.size(); ++i) column[sim.live[i]] = i;
        break;
      }
      case GateKind::ZIf:
        if (sim.outcomes.at(g.b) < 0) {
          throw PreconditionError("ZIF reads qubit " + std::to_string(g.b) +
                                  " before it is measured");
        }
        if (sim.outcomes[g.b] == 1) sim.state.pauli_z(col(g.a));
        break;
      default: {
        Gate mapped = g;
        mapped.a = col(g.a);
        if (g.two_qubit()) mapped.b = col(g.b);
        sim.state.apply(mapped);
        break;
      }
    }
  }
  return sim;
}

GraphStateReport check_graph_state(const Tableau& t, const Graph& g) {
  GraphStateReport rep;
  const std::size_t n = g.order();
  if (t.qubits() != n) {
    rep.detail = "tableau has " + std::to_string(t.qubits()) + " qubits, graph has " +
                 std::to_string(n) + " vertices";
    return rep;
  }
  f2::BitVector signs(n);
  for (Vertex v = 0; v < n; ++v) {
    f2::BitVector x(n);
    x.set(v);
    const auto s = t.sign_of(x, g.neighbourhood(v));
    if (!s) {
      rep.detail = "generator of vertex " + std::to_string(v) + " is not a stabilizer";
      return rep;
    }
    signs.set(v, *s);
  }
  if (t.rows() != n || !t.valid()) {
    rep.detail = "tableau is not a valid stabilizer state";
    return rep;
  }
  rep.matrix_match = true;
  rep.signs_match = !signs.any();
  // A Pauli a flips generator v when row_v * Lambda * a^T = 1; row_v * Lambda
  // is (A_v | e_v) for the graph-state generator [e_v | A_v].
  f2::BitMatrix m(n, 2 * n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbours(v)) m.set(v, u);
    m.set(v, n + v);
  }
  const auto a = f2::solve(m, signs);
  if (!a) throw Error("check_graph_state: sign correction has no solution");
  rep.correction = *a;
  rep.detail = rep.signs_match ? "exact match" : "match up to Pauli";
  return rep;
}

GraphStateReport verify_trace(const OpTrace& trace, const Graph& g, MeasurePolicy policy,
                              std::uint64_t seed) {
  const Simulation sim = simulate(trace_to_circuit(trace), policy, seed);
  for (std::size_t i = 0; i < sim.live.size(); ++i) {
    if (sim.live[i] != i) {
      GraphStateReport rep;
      rep.detail = "surviving qubits are not the target vertices";
      return rep;
    }
  }
  return check_graph_state(sim.state, g);
}

}  // namespace ecsynth
