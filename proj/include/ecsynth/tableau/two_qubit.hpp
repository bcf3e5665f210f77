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

#include "ecsynth/f2/bit_matrix.hpp"
#include "ecsynth/tableau/circuit.hpp"

namespace ecsynth {

/// 4x4 column action on (x_a, x_b, z_a, z_b) that preserves the symplectic
/// form. Row vectors multiply from the left: a Pauli a maps to a * M.
class Symplectic2Q {
 public:
  /// Identity.
  Symplectic2Q();
  /// Throws PreconditionError unless m is 4x4 and symplectic.
  explicit Symplectic2Q(const f2::BitMatrix& m);
  /// Bit 4r+c of key is entry (r, c).
  static Symplectic2Q from_key(std::uint16_t key);
  static bool is_symplectic(const f2::BitMatrix& m);

  const f2::BitMatrix& matrix() const { return m_; }
  std::uint16_t key() const;

  bool operator==(const Symplectic2Q&) const = default;

 private:
  f2::BitMatrix m_;
};

/// (a) local gates only, (b) one CZ, (c) one CZ and one SWAP, (d) SWAP only.
enum class TwoQubitClass { A, B, C, D };

std::string to_string(TwoQubitClass c);

struct ClassCounts {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  std::size_t d = 0;
  std::size_t total = 0;
};

/// Scans all 2^16 4x4 matrices and classifies the symplectic ones.
ClassCounts enumerate_two_qubit_classes();
TwoQubitClass classify(const Symplectic2Q& m);

/// Single-qubit gates, at most one CZ and at most one SWAP (last), on qubits
/// 0 and 1, whose column action equals m.
Circuit decompose_two_qubit(const Symplectic2Q& m);

/// 2n x 2n column action of the unitary gates of c. Throws on MeasZ/ZIf.
f2::BitMatrix symplectic_action(const Circuit& c);

/// Column action moving logical qubit q onto wire perm[q].
f2::BitMatrix permutation_action(const std::vector<std::size_t>& perm);

struct RewrittenCircuit {
  /// Single-qubit gates and CZ only.
  Circuit circuit;
  /// Logical qubit q ends on wire permutation[q].
  std::vector<std::size_t> permutation;
};

/// Replaces every two-qubit gate by its decomposition and absorbs all SWAPs
/// into a relabelling of wires, so
///   symplectic_action(c) == symplectic_action(out.circuit) * permutation_action(out.permutation).
RewrittenCircuit rewrite_circuit(const Circuit& c);

}  // namespace ecsynth
