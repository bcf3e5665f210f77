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

#include "ecsynth/tableau/two_qubit.hpp"

#include <array>
#include <optional>

#include "ecsynth/error.hpp"
#include "ecsynth/tableau/tableau.hpp"

namespace ecsynth {

namespace {

f2::BitMatrix from_bits(std::uint16_t key) {
  f2::BitMatrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) m.set(r, c, (key >> (4 * r + c)) & 1);
  }
  return m;
}

std::uint16_t to_bits(const f2::BitMatrix& m) {
  std::uint16_t key = 0;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (m.get(r, c)) key = static_cast<std::uint16_t>(key | (1u << (4 * r + c)));
    }
  }
  return key;
}

f2::BitMatrix lambda(std::size_t n) {
  f2::BitMatrix l(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    l.set(i, n + i);
    l.set(n + i, i);
  }
  return l;
}

// The six single-qubit column actions as gate words, in circuit order.
const std::array<std::vector<GateKind>, 6> kSingle{{
    {},
    {GateKind::H},
    {GateKind::S, GateKind::H},
    {GateKind::S},
    {GateKind::H, GateKind::S, GateKind::H},
    {GateKind::H, GateKind::S},
}};

struct Witness {
  TwoQubitClass cls = TwoQubitClass::A;
  std::array<int, 4> local{};  // before CZ on q0, q1; after CZ on q0, q1
};

void push_local(Circuit& c, int which, std::size_t q) {
  for (GateKind k : kSingle[static_cast<std::size_t>(which)]) c.add({k, q});
}

Circuit witness_circuit(const Witness& w) {
  Circuit c{2, {}};
  push_local(c, w.local[0], 0);
  push_local(c, w.local[1], 1);
  if (w.cls == TwoQubitClass::B || w.cls == TwoQubitClass::C) {
    c.add(Gate::cz(0, 1));
    push_local(c, w.local[2], 0);
    push_local(c, w.local[3], 1);
  }
  if (w.cls == TwoQubitClass::C || w.cls == TwoQubitClass::D) c.add(Gate::swap(0, 1));
  return c;
}

using WitnessTable = std::vector<std::optional<Witness>>;

const WitnessTable& witness_table() {
  static const WitnessTable table = [] {
    WitnessTable t(1u << 16);
    auto record = [&](const Witness& w) {
      const std::uint16_t key = to_bits(symplectic_action(witness_circuit(w)));
      if (!t[key]) t[key] = w;
    };
    // Classes in priority order so each matrix keeps its cheapest shape.
    for (TwoQubitClass cls : {TwoQubitClass::A, TwoQubitClass::D}) {
      for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) record({cls, {a, b, 0, 0}});
      }
    }
    for (TwoQubitClass cls : {TwoQubitClass::B, TwoQubitClass::C}) {
      for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
          for (int c = 0; c < 6; ++c) {
            for (int d = 0; d < 6; ++d) record({cls, {a, b, c, d}});
          }
        }
      }
    }
    return t;
  }();
  return table;
}

const Witness& witness_for(const Symplectic2Q& m) {
  const auto& w = witness_table()[m.key()];
  if (!w) throw Error("no two-qubit normal form for a symplectic matrix");
  return *w;
}

}  // namespace

Symplectic2Q::Symplectic2Q() : m_(f2::BitMatrix::identity(4)) {}

Symplectic2Q::Symplectic2Q(const f2::BitMatrix& m) : m_(m) {
  if (!is_symplectic(m)) throw PreconditionError("matrix is not a 4x4 symplectic matrix");
}

Symplectic2Q Symplectic2Q::from_key(std::uint16_t key) { return Symplectic2Q(from_bits(key)); }

bool Symplectic2Q::is_symplectic(const f2::BitMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) return false;
  const f2::BitMatrix l = lambda(2);
  return m * l * m.transpose() == l;
}

std::uint16_t Symplectic2Q::key() const { return to_bits(m_); }

std::string to_string(TwoQubitClass c) {
  switch (c) {
    case TwoQubitClass::A: return "a";
    case TwoQubitClass::B: return "b";
    case TwoQubitClass::C: return "c";
    case TwoQubitClass::D: return "d";
  }
  return "?";
}

ClassCounts enumerate_two_qubit_classes() {
  ClassCounts counts;
  for (std::uint32_t key = 0; key < (1u << 16); ++key) {
    const f2::BitMatrix m = from_bits(static_cast<std::uint16_t>(key));
    if (!Symplectic2Q::is_symplectic(m)) continue;
    ++counts.total;
    switch (classify(Symplectic2Q(m))) {
      case TwoQubitClass::A: ++counts.a; break;
      case TwoQubitClass::B: ++counts.b; break;
      case TwoQubitClass::C: ++counts.c; break;
      case TwoQubitClass::D: ++counts.d; break;
    }
  }
  return counts;
}

TwoQubitClass classify(const Symplectic2Q& m) { return witness_for(m).cls; }

Circuit decompose_two_qubit(const Symplectic2Q& m) { return witness_circuit(witness_for(m)); }

f2::BitMatrix symplectic_action(const Circuit& c) {
  const std::size_t n = c.qubits;
  Tableau t = Tableau::from_generators(f2::BitMatrix::identity(2 * n), f2::BitVector(2 * n));
  for (const Gate& g : c.gates) {
    if (!g.unitary()) throw PreconditionError("symplectic_action: circuit has a measurement");
    t.apply(g);
  }
  return t.generators();
}

f2::BitMatrix permutation_action(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  f2::BitMatrix p(2 * n, 2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    if (perm[q] >= n) throw PreconditionError("permutation entry out of range");
    p.set(perm[q], q);
    p.set(n + perm[q], n + q);
  }
  return p;
}

RewrittenCircuit rewrite_circuit(const Circuit& c) {
  validate(c);
  RewrittenCircuit out;
  out.circuit.qubits = c.qubits;
  std::vector<std::size_t>& wire = out.permutation;
  wire.resize(c.qubits);
  for (std::size_t q = 0; q < c.qubits; ++q) wire[q] = q;
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::SWAP:
        std::swap(wire[g.a], wire[g.b]);
        break;
      case GateKind::Clifford2: {
        const Circuit local = decompose_two_qubit(Symplectic2Q::from_key(g.matrix));
        const std::array<std::size_t, 2> logical{g.a, g.b};
        for (const Gate& inner : local.gates) {
          if (inner.kind == GateKind::SWAP) {
            std::swap(wire[g.a], wire[g.b]);
            continue;
          }
          Gate mapped = inner;
          mapped.a = wire[logical[inner.a]];
          if (inner.two_qubit()) mapped.b = wire[logical[inner.b]];
          out.circuit.add(mapped);
        }
        break;
      }
      default: {
        Gate mapped = g;
        mapped.a = wire[g.a];
        if (g.kind == GateKind::CZ || g.kind == GateKind::ZIf) mapped.b = wire[g.b];
        out.circuit.add(mapped);
        break;
      }
    }
  }
  return out;
}

}  // namespace ecsynth
