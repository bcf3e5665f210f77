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

namespace ecsynth {

/// ZIf applies Z to `a` when the recorded Z-measurement of `b` gave 1.
/// Clifford2 is an arbitrary two-qubit Clifford given by its 4x4 column
/// action on (x_a, x_b, z_a, z_b), packed row-major into `matrix`.
enum class GateKind { H, S, Sdg, X, Y, Z, CZ, SWAP, MeasZ, ZIf, Clifford2 };

struct Gate {
  GateKind kind = GateKind::H;
  std::size_t a = 0;
  std::size_t b = 0;
  std::uint16_t matrix = 0;

  static Gate h(std::size_t q) { return {GateKind::H, q}; }
  static Gate s(std::size_t q) { return {GateKind::S, q}; }
  static Gate sdg(std::size_t q) { return {GateKind::Sdg, q}; }
  static Gate x(std::size_t q) { return {GateKind::X, q}; }
  static Gate y(std::size_t q) { return {GateKind::Y, q}; }
  static Gate z(std::size_t q) { return {GateKind::Z, q}; }
  static Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, a, b}; }
  static Gate swap(std::size_t a, std::size_t b) { return {GateKind::SWAP, a, b}; }
  static Gate measz(std::size_t q) { return {GateKind::MeasZ, q}; }
  static Gate zif(std::size_t target, std::size_t measured) {
    return {GateKind::ZIf, target, measured};
  }
  static Gate clifford2(std::size_t a, std::size_t b, std::uint16_t matrix) {
    return {GateKind::Clifford2, a, b, matrix};
  }

  /// CZ, SWAP and Clifford2.
  bool two_qubit() const;
  /// False for MeasZ and ZIf.
  bool unitary() const;

  bool operator==(const Gate&) const = default;
};

std::string to_string(const Gate& g);

struct Circuit {
  std::size_t qubits = 0;
  std::vector<Gate> gates;

  /// Appends after range and distinctness checks; throws PreconditionError.
  void add(const Gate& g);
  std::size_t count(GateKind kind) const;
  std::size_t two_qubit_count() const;

  bool operator==(const Circuit&) const = default;
};

/// Throws PreconditionError on an out-of-range or repeated qubit argument.
void validate(const Circuit& c);

/// "CIRCUIT n=<count>" then one gate per line: "H 0", "CZ 0 1", "MEASZ 2",
/// "ZIF 3 2", "C2 0 1 1000 0100 0010 0001". '#' starts a comment.
std::string serialize_circuit(const Circuit& c);
Circuit parse_circuit(const std::string& text);

}  // namespace ecsynth
