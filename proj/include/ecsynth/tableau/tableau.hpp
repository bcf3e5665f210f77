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
#include <random>
#include <vector>

#include "ecsynth/f2/bit_matrix.hpp"
#include "ecsynth/graph/graph.hpp"
#include "ecsynth/tableau/circuit.hpp"

namespace ecsynth {

enum class MeasurePolicy { ForceZero, ForceOne, Random };

struct MeasureOutcome {
  bool outcome = false;
  bool deterministic = false;
};

/// Signed Pauli rows (-1)^r X^x Z^z with Y = XZ per qubit, following the
/// usual stabilizer-tableau phase rules. A state tableau has one row per
/// qubit; other row counts are allowed for tracking column actions.
class Tableau {
 public:
  Tableau() = default;

  static Tableau plus_state(std::size_t n);
  static Tableau zero_state(std::size_t n);
  /// Generators X_v Z_{N(v)} with positive signs.
  static Tableau graph_state(const Graph& g);
  /// Rows of gen are [x | z]; gen has 2n columns.
  static Tableau from_generators(const f2::BitMatrix& gen, const f2::BitVector& signs);

  std::size_t qubits() const { return n_; }
  std::size_t rows() const { return x_.size(); }
  bool x(std::size_t row, std::size_t q) const { return x_.at(row).get(q); }
  bool z(std::size_t row, std::size_t q) const { return z_.at(row).get(q); }
  bool sign(std::size_t row) const { return r_.at(row); }

  f2::BitMatrix generators() const;
  f2::BitVector signs() const;

  void h(std::size_t q);
  void s(std::size_t q);
  void sdg(std::size_t q);
  void pauli_x(std::size_t q);
  void pauli_y(std::size_t q);
  void pauli_z(std::size_t q);
  void cz(std::size_t a, std::size_t b);
  void swap(std::size_t a, std::size_t b);
  /// Any unitary gate; Clifford2 runs through its two-qubit decomposition.
  void apply(const Gate& g);

  /// Measures Z on q and removes q; later qubits shift down by one. `rng`
  /// is required for MeasurePolicy::Random on a random outcome.
  MeasureOutcome measure_z(std::size_t q, MeasurePolicy policy, std::mt19937_64* rng = nullptr);

  /// Sign of +-X^x Z^z if it lies in the group generated by the rows.
  std::optional<bool> sign_of(const f2::BitVector& x, const f2::BitVector& z) const;

  /// n rows, pairwise commuting and independent.
  bool valid() const;

  bool operator==(const Tableau&) const = default;

 private:
  void check(std::size_t q) const;
  // row h <- row i * row h
  void rowsum(std::size_t h, std::size_t i);

  std::size_t n_ = 0;
  std::vector<f2::BitVector> x_;
  std::vector<f2::BitVector> z_;
  std::vector<bool> r_;
};

}  // namespace ecsynth
