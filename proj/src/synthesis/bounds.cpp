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

#include "ecsynth/synthesis/bounds.hpp"

#include <numeric>

#include "ecsynth/error.hpp"

namespace ecsynth {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator-(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator*(const Rational& a, const Rational& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

Rational operator/(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

namespace {

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

Rational rankwidth_bound_threshold(std::size_t r) {
  if (r == 0) throw PreconditionError("rank-width bound needs r >= 1");
  const std::int64_t k = as_int(r);
  if (r % 2 == 1) return {13 * k * k - 6 * k - 3, 4 * k};
  return {13 * k - 6, 4};
}

std::optional<Rational> bound_upper_rankwidth(std::size_t n, std::size_t r) {
  if (r == 0 || Rational(as_int(n)) < rankwidth_bound_threshold(r)) return std::nullopt;
  const std::int64_t k = as_int(r);
  const Rational nn(as_int(n));
  if (r % 2 == 1) {
    const Rational slope(5 * k * k - 1, 4 * k);
    const Rational offset(221 * k * k * k * k - 180 * k * k * k + 10 * k * k + 36 * k + 9,
                          96 * k * k);
    return slope * nn - offset;
  }
  return Rational(5 * k, 4) * nn - Rational(221 * k * k - 180 * k + 100, 96);
}

Rational bound_upper_generic(std::size_t n) {
  if (n == 0) return {0};
  return {(as_int(n) - 1) * (as_int(n) + 4), 6};
}

std::size_t bound_lower(std::size_t n, std::size_t r) {
  if (n < 2) throw PreconditionError("lower bound needs n >= 2");
  return n + r - 2;
}

std::size_t batch_threshold(std::size_t r) {
  if (r == 0) throw PreconditionError("batch threshold needs r >= 1");
  const std::int64_t k = as_int(r);
  // floor(p/q + 1) with p, q > 0.
  if (r % 2 == 1) return static_cast<std::size_t>((17 * k * k - 6 * k - 3) / (4 * k) + 1);
  return static_cast<std::size_t>((17 * k - 6) / 4 + 1);
}

}  // namespace ecsynth
