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
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ecsynth::f2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

/// Bit-packed vector over GF(2). Bits past size() are always zero.
class BitVector {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVector() = default;
  explicit BitVector(std::size_t size);
  BitVector(std::initializer_list<int> bits);

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);
  void reset();

  bool any() const;
  std::size_t popcount() const;
  /// Index of the lowest set bit, or npos.
  std::size_t first_set() const;
  /// Parity of the bitwise AND with `other`.
  bool dot(const BitVector& other) const;
  std::vector<std::size_t> ones() const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
  BitVector operator~() const;

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  std::string to_string() const;

  bool operator==(const BitVector&) const = default;

 private:
  void check(std::size_t i) const;

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Dense row-major bit-packed matrix over GF(2).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  BitMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(const std::vector<BitVector>& rows,
                             std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value = true);
  void flip(std::size_t r, std::size_t c);

  std::span<const Word> row_words(std::size_t r) const;
  std::span<Word> row_words(std::size_t r);
  BitVector row(std::size_t r) const;
  void set_row(std::size_t r, const BitVector& v);
  /// row[dst] ^= row[src]
  void xor_row(std::size_t dst, std::size_t src);
  /// row[dst] ^= v
  void xor_row(std::size_t dst, const BitVector& v);
  void swap_rows(std::size_t a, std::size_t b);

  BitMatrix transpose() const;
  BitVector multiply(const BitVector& x) const;
  /// Row vector times matrix: v (length rows) * M.
  BitVector left_multiply(const BitVector& v) const;
  BitMatrix operator*(const BitMatrix& other) const;

  bool is_zero() const;
  std::string to_string() const;

  bool operator==(const BitMatrix&) const = default;

 private:
  void check(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Row v equals the sum of the rows listed in `combination` (v excluded).
struct RowDependence {
  std::size_t row;
  std::vector<std::size_t> combination;
};

std::size_t rank(const BitMatrix& m);

/// Eliminates rows top to bottom and reports the first row that reduces to
/// zero, together with the earlier rows whose sum equals it.
std::optional<RowDependence> find_dependent_row(const BitMatrix& m);

/// Some x with m * x = b, or nothing when inconsistent. Free variables are 0.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

}  // namespace ecsynth::f2
