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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace ecsynth {

/// Exact fraction with a positive denominator in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT(google-explicit-constructor)

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  /// "p" or "p/q".
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Smallest n for which the rank-width upper bound formula applies:
/// (13r^2-6r-3)/(4r) for odd r, (13r-6)/4 for even r.
Rational rankwidth_bound_threshold(std::size_t r);

/// Upper bound on the cost of any n-vertex graph of rank-width at most r,
/// or nothing when r = 0 or n is below the threshold.
std::optional<Rational> bound_upper_rankwidth(std::size_t n, std::size_t r);

/// (n-1)(n+4)/6.
Rational bound_upper_generic(std::size_t n);

/// n + r - 2 for connected graphs with n >= 2 and rank-width r.
std::size_t bound_lower(std::size_t n, std::size_t r);

/// Graph size from which batched peeling is used for rank-width r:
/// floor((17r^2-6r-3)/(4r) + 1) for odd r, floor((17r-6)/4 + 1) for even r.
std::size_t batch_threshold(std::size_t r);

}  // namespace ecsynth
