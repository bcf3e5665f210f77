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

#include "ecsynth/words/do_word.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "ecsynth/error.hpp"

namespace ecsynth {

DOWord DOWord::from_names(const std::vector<std::string>& letters) {
  std::map<std::string, Vertex> ids;
  std::vector<std::string> names;
  std::vector<Vertex> seq;
  seq.reserve(letters.size());
  for (const auto& s : letters) {
    auto [it, inserted] = ids.emplace(s, names.size());
    if (inserted) names.push_back(s);
    seq.push_back(it->second);
  }
  return from_ids(std::move(seq), std::move(names));
}

DOWord DOWord::from_ids(std::vector<Vertex> letters, std::vector<std::string> names) {
  if (letters.size() % 2 != 0) {
    throw PreconditionError("double occurrence word has odd length " +
                            std::to_string(letters.size()));
  }
  const std::size_t n = letters.size() / 2;
  if (names.empty()) {
    for (Vertex v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
  }
  if (names.size() != n) throw PreconditionError("word names do not match its length");
  DOWord w;
  w.first_.assign(n, letters.size());
  w.second_.assign(n, letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Vertex v = letters[i];
    if (v >= n) throw PreconditionError("word letter " + std::to_string(v) + " out of range");
    if (w.first_[v] == letters.size()) {
      w.first_[v] = i;
    } else if (w.second_[v] == letters.size()) {
      w.second_[v] = i;
    } else {
      throw PreconditionError("letter '" + names[v] + "' occurs more than twice");
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (w.second_[v] == letters.size()) {
      throw PreconditionError("letter '" + names[v] + "' occurs only once");
    }
  }
  w.letters_ = std::move(letters);
  w.names_ = std::move(names);
  return w;
}

DOWord DOWord::without(Vertex v) const {
  if (v >= order()) throw PreconditionError("without: letter out of range");
  std::vector<Vertex> seq;
  seq.reserve(letters_.size() - 2);
  for (Vertex x : letters_) {
    if (x != v) seq.push_back(x > v ? x - 1 : x);
  }
  std::vector<std::string> names = names_;
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(v));
  return from_ids(std::move(seq), std::move(names));
}

DOWord DOWord::reversed_between(Vertex v) const {
  std::vector<Vertex> seq = letters_;
  std::reverse(seq.begin() + static_cast<std::ptrdiff_t>(first(v)) + 1,
               seq.begin() + static_cast<std::ptrdiff_t>(second(v)));
  return from_ids(std::move(seq), names_);
}

std::string DOWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += names_[letters_[i]];
  }
  return out;
}

DOWord parse_word(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> declared;
  std::vector<std::string> tokens;
  std::vector<std::size_t> token_lines;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (tokens.empty() && !declared && tok == "WORD") {
        std::string field;
        if (!(ls >> field) || field.rfind("n=", 0) != 0) {
          throw ParseError("expected 'n=<count>' after WORD", line_no, 1);
        }
        try {
          std::size_t used = 0;
          declared = std::stoul(field.substr(2), &used);
          if (used + 2 != field.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw ParseError("invalid letter count '" + field + "'", line_no, 1);
        }
        continue;
      }
      tokens.push_back(tok);
      token_lines.push_back(line_no);
    }
  }
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    const std::string run = tokens[0];
    tokens.clear();
    for (char c : run) tokens.emplace_back(1, c);
  }
  if (declared && tokens.size() != 2 * *declared) {
    throw ParseError("header declares " + std::to_string(*declared) + " letters but the word has " +
                         std::to_string(tokens.size()) + " symbols",
                     line_no, 1);
  }
  try {
    return DOWord::from_names(tokens);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("malformed word: ") + e.what(),
                     token_lines.empty() ? line_no : token_lines.back(), 1);
  }
}

std::string serialize_word(const DOWord& w) {
  return "WORD n=" + std::to_string(w.order()) + "\n" + w.to_string() + "\n";
}

DOWord random_word(std::size_t n, std::uint64_t seed) {
  std::vector<Vertex> seq;
  seq.reserve(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    seq.push_back(v);
    seq.push_back(v);
  }
  std::mt19937_64 rng(seed);
  std::shuffle(seq.begin(), seq.end(), rng);
  return DOWord::from_ids(std::move(seq));
}

namespace {

enum class Pattern { Disjoint, Nested, Crossing };

Pattern pattern(const DOWord& w, Vertex a, Vertex b) {
  if (w.first(b) < w.first(a)) std::swap(a, b);
  if (w.second(a) < w.first(b)) return Pattern::Disjoint;
  return w.second(b) < w.second(a) ? Pattern::Nested : Pattern::Crossing;
}

template <typename Keep>
Graph pattern_graph(const DOWord& w, Keep keep) {
  Graph g(w.order());
  for (Vertex a = 0; a < w.order(); ++a) {
    for (Vertex b = a + 1; b < w.order(); ++b) {
      if (keep(pattern(w, a, b))) g.add_edge(a, b);
    }
  }
  return g;
}

}  // namespace

Graph interval_graph(const DOWord& w) {
  return pattern_graph(w, [](Pattern p) { return p != Pattern::Disjoint; });
}

Graph containment_graph(const DOWord& w) {
  return pattern_graph(w, [](Pattern p) { return p == Pattern::Nested; });
}

Graph circle_graph(const DOWord& w) {
  return pattern_graph(w, [](Pattern p) { return p == Pattern::Crossing; });
}

}  // namespace ecsynth
