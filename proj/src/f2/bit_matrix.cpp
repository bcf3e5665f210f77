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

#include "ecsynth/f2/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "ecsynth/error.hpp"

namespace ecsynth::f2 {

namespace {

Word tail_mask(std::size_t bits) {
  const std::size_t r = bits % kWordBits;
  return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

}  // namespace

// BitVector

BitVector::BitVector(std::size_t size)
    : size_(size), words_(words_for(size), 0) {}

BitVector::BitVector(std::initializer_list<int> bits)
    : BitVector(bits.size()) {
  std::size_t i = 0;
  for (int b : bits) set(i++, b != 0);
}

void BitVector::check(std::size_t i) const {
  if (i >= size_) {
    throw PreconditionError(
        "bit index " + std::to_string(i) + " out of range for size " +
        std::to_string(size_));
  }
}

bool BitVector::get(std::size_t i) const {
  check(i);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BitVector::set(std::size_t i, bool value) {
  check(i);
  const Word bit = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= bit;
  } else {
    words_[i / kWordBits] &= ~bit;
  }
}

void BitVector::flip(std::size_t i) {
  check(i);
  words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
}

void BitVector::reset() { std::fill(words_.begin(), words_.end(), 0); }

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w; });
}

std::size_t BitVector::popcount() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVector::first_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k]) {
      return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
  }
  return npos;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) throw PreconditionError("dot: size mismatch");
  Word acc = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
  return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    Word w = words_[k];
    while (w) {
      out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw PreconditionError("xor: size mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (other.size_ != size_) throw PreconditionError("and: size mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  if (other.size_ != size_) throw PreconditionError("or: size mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

BitVector BitVector::operator~() const {
  BitVector out = *this;
  for (Word& w : out.words_) w = ~w;
  if (!out.words_.empty()) out.words_.back() &= tail_mask(size_);
  return out;
}

std::string BitVector::to_string() const {
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) s.push_back(get(i) ? '1' : '0');
  return s;
}

// BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)),
      data_(rows * words_for(cols), 0) {}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  *this = BitMatrix(rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw PreconditionError("ragged matrix literal");
    std::size_t c = 0;
    for (int b : row) set(r, c++, b != 0);
    ++r;
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows,
                               std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

void BitMatrix::check(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw PreconditionError("matrix index (" + std::to_string(r) + ", " +
                            std::to_string(c) + ") out of range for " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  check(r, c);
  return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  check(r, c);
  const Word bit = Word{1} << (c % kWordBits);
  Word& w = data_[r * stride_ + c / kWordBits];
  w = value ? (w | bit) : (w & ~bit);
}

void BitMatrix::flip(std::size_t r, std::size_t c) {
  check(r, c);
  data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
}

std::span<const Word> BitMatrix::row_words(std::size_t r) const {
  if (r >= rows_) throw PreconditionError("row index out of range");
  return {data_.data() + r * stride_, stride_};
}

std::span<Word> BitMatrix::row_words(std::size_t r) {
  if (r >= rows_) throw PreconditionError("row index out of range");
  return {data_.data() + r * stride_, stride_};
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  auto src = row_words(r);
  std::copy(src.begin(), src.end(), v.words().begin());
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
  if (v.size() != cols_) throw PreconditionError("set_row: length mismatch");
  auto dst = row_words(r);
  std::copy(v.words().begin(), v.words().end(), dst.begin());
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
  if (dst >= rows_ || src >= rows_) throw PreconditionError("row index out of range");
  Word* d = data_.data() + dst * stride_;
  const Word* s = data_.data() + src * stride_;
  for (std::size_t k = 0; k < stride_; ++k) d[k] ^= s[k];
}

void BitMatrix::xor_row(std::size_t dst, const BitVector& v) {
  if (v.size() != cols_) throw PreconditionError("xor_row: length mismatch");
  auto d = row_words(dst);
  for (std::size_t k = 0; k < stride_; ++k) d[k] ^= v.words()[k];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a >= rows_ || b >= rows_) throw PreconditionError("row index out of range");
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r);
    }
  }
  return t;
}

BitVector BitMatrix::multiply(const BitVector& x) const {
  if (x.size() != cols_) throw PreconditionError("multiply: length mismatch");
  BitVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Word acc = 0;
    auto rw = row_words(r);
    for (std::size_t k = 0; k < stride_; ++k) acc ^= rw[k] & x.words()[k];
    if (std::popcount(acc) & 1) out.set(r);
  }
  return out;
}

BitVector BitMatrix::left_multiply(const BitVector& v) const {
  if (v.size() != rows_) throw PreconditionError("left_multiply: length mismatch");
  BitVector out(cols_);
  for (std::size_t r : v.ones()) {
    auto rw = row_words(r);
    for (std::size_t k = 0; k < stride_; ++k) out.words()[k] ^= rw[k];
  }
  return out;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
  if (cols_ != other.rows_) throw PreconditionError("matrix product: shape mismatch");
  BitMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto dst = out.row_words(r);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!get(r, c)) continue;
      auto src = other.row_words(c);
      for (std::size_t k = 0; k < out.stride_; ++k) dst[k] ^= src[k];
    }
  }
  return out;
}

bool BitMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    s += row(r).to_string();
    s.push_back('\n');
  }
  return s;
}

// Elimination

std::size_t rank(const BitMatrix& m) {
  BitMatrix work = m;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < work.cols() && pivot_row < work.rows(); ++c) {
    std::size_t p = pivot_row;
    while (p < work.rows() && !work.get(p, c)) ++p;
    if (p == work.rows()) continue;
    work.swap_rows(p, pivot_row);
    for (std::size_t r = pivot_row + 1; r < work.rows(); ++r) {
      if (work.get(r, c)) work.xor_row(r, pivot_row);
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::optional<RowDependence> find_dependent_row(const BitMatrix& m) {
  struct Pivot {
    std::size_t column;
    BitVector row;
    BitVector combination;
  };
  std::vector<Pivot> pivots;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BitVector r = m.row(i);
    BitVector comb(m.rows());
    comb.set(i);
    for (const Pivot& p : pivots) {
      if (r.get(p.column)) {
        r ^= p.row;
        comb ^= p.combination;
      }
    }
    const std::size_t lead = r.first_set();
    if (lead == BitVector::npos) {
      comb.flip(i);
      return RowDependence{i, comb.ones()};
    }
    pivots.push_back({lead, std::move(r), std::move(comb)});
  }
  return std::nullopt;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
  if (b.size() != m.rows()) throw PreconditionError("solve: rhs length mismatch");
  BitMatrix work = m;
  BitVector rhs = b;
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < work.cols() && pivot_row < work.rows(); ++c) {
    std::size_t p = pivot_row;
    while (p < work.rows() && !work.get(p, c)) ++p;
    if (p == work.rows()) continue;
    work.swap_rows(p, pivot_row);
    if (p != pivot_row) {
      const bool tmp = rhs.get(p);
      rhs.set(p, rhs.get(pivot_row));
      rhs.set(pivot_row, tmp);
    }
    for (std::size_t r = 0; r < work.rows(); ++r) {
      if (r != pivot_row && work.get(r, c)) {
        work.xor_row(r, pivot_row);
        if (rhs.get(pivot_row)) rhs.flip(r);
      }
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < work.rows(); ++r) {
    if (rhs.get(r)) return std::nullopt;
  }
  BitVector x(m.cols());
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
    if (rhs.get(k)) x.set(pivot_cols[k]);
  }
  return x;
}

}  // namespace ecsynth::f2
