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

#include "ecsynth/graph/graph.hpp"

namespace ecsynth {

/// A word of length 2n in which each of the n letters appears exactly twice.
/// Letters are vertex ids 0..n-1; names are kept for printing.
class DOWord {
 public:
  DOWord() = default;

  /// Names are assigned ids in order of first appearance.
  static DOWord from_names(const std::vector<std::string>& letters);
  /// Each id in 0..n-1 must appear exactly twice. Names default to "v<id>".
  static DOWord from_ids(std::vector<Vertex> letters, std::vector<std::string> names = {});

  std::size_t order() const { return names_.size(); }
  std::size_t length() const { return letters_.size(); }
  const std::vector<Vertex>& letters() const { return letters_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Vertex v) const { return names_.at(v); }

  /// 0-based positions of the first and second occurrence.
  std::size_t first(Vertex v) const { return first_.at(v); }
  std::size_t second(Vertex v) const { return second_.at(v); }

  /// Drops both occurrences of v; ids above v shift down by one.
  DOWord without(Vertex v) const;
  /// Reverses the letters strictly between the two occurrences of v.
  DOWord reversed_between(Vertex v) const;

  /// Names separated by single spaces.
  std::string to_string() const;

  bool operator==(const DOWord& other) const { return letters_ == other.letters_; }

 private:
  std::vector<Vertex> letters_;
  std::vector<std::string> names_;
  std::vector<std::size_t> first_;
  std::vector<std::size_t> second_;
};

/// Optional "WORD n=<count>" header, then whitespace-separated names. A lone
/// multi-character token is split into single characters. '#' starts a
/// comment. Throws ParseError.
DOWord parse_word(const std::string& text);
std::string serialize_word(const DOWord& w);

/// Uniformly shuffled word on ids 0..n-1.
DOWord random_word(std::size_t n, std::uint64_t seed);

/// Pairs whose occurrences interleave (abab) or nest (abba).
Graph interval_graph(const DOWord& w);
/// Nested pairs only.
Graph containment_graph(const DOWord& w);
/// Interleaved pairs only.
Graph circle_graph(const DOWord& w);

}  // namespace ecsynth
