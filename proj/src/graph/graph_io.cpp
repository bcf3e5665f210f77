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

#include "ecsynth/graph/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "ecsynth/error.hpp"

namespace ecsynth {

namespace {

constexpr std::size_t kGraph6MaxOrder = 62;

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t to_index(const Token& t, std::size_t line) {
  std::size_t value = 0;
  const char* last = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected a non-negative integer, got '" + t.text + "'", line,
                     t.column);
  }
  return value;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::size_t lineno = 0;
  bool have_n = false;
  Graph g;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (!have_n) {
      if (tok.size() != 1) throw ParseError("first line must hold the vertex count", lineno);
      g = Graph(to_index(tok[0], lineno));
      have_n = true;
      continue;
    }
    if (tok.size() != 2) {
      throw ParseError("expected an edge 'u v'", lineno, tok.front().column);
    }
    const std::size_t u = to_index(tok[0], lineno);
    const std::size_t v = to_index(tok[1], lineno);
    if (u >= g.order() || v >= g.order()) {
      const Token& bad = u >= g.order() ? tok[0] : tok[1];
      throw ParseError("vertex out of range for n=" + std::to_string(g.order()), lineno,
                       bad.column);
    }
    if (u == v) throw ParseError("self-loop", lineno, tok[0].column);
    if (g.adjacent(u, v)) throw ParseError("duplicate edge", lineno, tok[0].column);
    g.add_edge(u, v);
  }
  if (!have_n) throw ParseError("empty input; expected the vertex count", lineno == 0 ? 1 : lineno);
  return g;
}

std::string trimmed(const std::string& text) {
  auto first = std::find_if_not(text.begin(), text.end(),
                                [](unsigned char c) { return std::isspace(c); });
  auto last = std::find_if_not(text.rbegin(), text.rend(),
                               [](unsigned char c) { return std::isspace(c); })
                  .base();
  return first < last ? std::string(first, last) : std::string();
}

Graph parse_graph6(const std::string& text) {
  const std::string s = trimmed(text);
  if (s.empty()) throw ParseError("empty graph6 string", 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 63 || s[i] > 126) throw ParseError("invalid graph6 character", 1, i + 1);
  }
  const std::size_t n = static_cast<std::size_t>(s[0] - 63);
  if (n > kGraph6MaxOrder) throw ParseError("graph6 orders above 62 are not supported", 1, 1);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (s.size() != chars + 1) {
    throw ParseError("graph6 length " + std::to_string(s.size()) + " does not match n=" +
                         std::to_string(n),
                     1, s.size());
  }
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int value = s[1 + k / 6] - 63;
      if ((value >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; k < chars * 6; ++k) {
    const int value = s[1 + k / 6] - 63;
    if ((value >> (5 - k % 6)) & 1) throw ParseError("nonzero graph6 padding", 1, 2 + k / 6);
  }
  return g;
}

std::string serialize_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw PreconditionError("graph6 supports at most 62 vertices");
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<int> packed((bits + 5) / 6, 0);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) packed[k / 6] |= 1 << (5 - k % 6);
    }
  }
  std::string out(1, static_cast<char>(63 + n));
  for (int v : packed) out.push_back(static_cast<char>(63 + v));
  return out;
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::Graph6) return serialize_graph6(g) + "\n";
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

GraphFormat sniff_graph_format(const std::string& text) {
  const std::string s = trimmed(text);
  if (s.empty() || s.find_first_of(" \t\r\n") != std::string::npos) {
    return GraphFormat::EdgeList;
  }
  const bool digits = std::all_of(s.begin(), s.end(),
                                  [](unsigned char c) { return std::isdigit(c); });
  return digits ? GraphFormat::EdgeList : GraphFormat::Graph6;
}

}  // namespace ecsynth
