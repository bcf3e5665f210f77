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

#include "ecsynth/graph/op_trace.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "ecsynth/error.hpp"

namespace ecsynth {

namespace {

constexpr std::size_t kGone = std::numeric_limits<std::size_t>::max();

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
  std::size_t value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || tok.empty()) {
    throw ParseError("expected a non-negative integer, got '" + tok + "'", line);
  }
  return value;
}

std::size_t parse_keyed(const std::string& tok, const std::string& key,
                        std::size_t line) {
  if (tok.rfind(key + "=", 0) != 0) {
    throw ParseError("expected '" + key + "=<count>', got '" + tok + "'", line);
  }
  return parse_count(tok.substr(key.size() + 1), line);
}

}  // namespace

std::size_t OpTrace::cost() const {
  return static_cast<std::size_t>(std::count_if(
      ops.begin(), ops.end(), [](const GraphOp& op) { return op.is_cost_one(); }));
}

void OpTrace::append(const OpTrace& other) {
  ops.insert(ops.end(), other.ops.begin(), other.ops.end());
}

Graph replay(const OpTrace& trace, const ReplayObserver& observer) {
  const std::size_t initial = trace.initial_vertices();
  Graph g(initial);
  std::vector<std::size_t> live(initial);
  for (std::size_t i = 0; i < initial; ++i) live[i] = i;

  auto resolve = [&](Vertex v, std::size_t step) {
    if (v >= initial) {
      throw ReplayError("vertex " + std::to_string(v) + " out of range", step);
    }
    if (live[v] == kGone) {
      throw ReplayError("vertex " + std::to_string(v) + " was already deleted", step);
    }
    return live[v];
  };

  for (std::size_t step = 0; step < trace.ops.size(); ++step) {
    const GraphOp& op = trace.ops[step];
    GraphOp cur = op;
    cur.v = resolve(op.v, step);
    if (op.binary()) cur.w = resolve(op.w, step);
    if (observer) observer(step, g, op, cur);
    try {
      apply_op_in_place(g, cur);
    } catch (const PreconditionError& e) {
      throw ReplayError(e.what(), step);
    }
    if (op.kind == OpKind::Delete) {
      const std::size_t gone = live[op.v];
      live[op.v] = kGone;
      for (auto& idx : live) {
        if (idx != kGone && idx > gone) --idx;
      }
    }
  }
  if (g.order() != trace.vertices) {
    throw ReplayError("final vertex count " + std::to_string(g.order()) +
                          " differs from declared " + std::to_string(trace.vertices),
                      trace.ops.size());
  }
  return g;
}

std::string serialize_trace(const OpTrace& trace) {
  std::ostringstream out;
  out << "TRACE n=" << trace.vertices << " s=" << trace.ancillas << '\n';
  for (const GraphOp& op : trace.ops) out << to_string(op) << '\n';
  return out.str();
}

OpTrace parse_trace(const std::string& text) {
  std::istringstream in(text);
  OpTrace trace;
  bool header = false;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 3 || tok[0] != "TRACE") {
        throw ParseError("expected header 'TRACE n=<count> s=<ancillas>'", lineno);
      }
      trace.vertices = parse_keyed(tok[1], "n", lineno);
      trace.ancillas = parse_keyed(tok[2], "s", lineno);
      header = true;
      continue;
    }
    const std::string& name = tok[0];
    std::size_t arity = 0;
    OpKind kind{};
    if (name == "LC") {
      kind = OpKind::LC, arity = 1;
    } else if (name == "DEL") {
      kind = OpKind::Delete, arity = 1;
    } else if (name == "EC1") {
      kind = OpKind::EC1, arity = 2;
    } else if (name == "EC2") {
      kind = OpKind::EC2, arity = 2;
    } else if (name == "EC3") {
      kind = OpKind::EC3, arity = 2;
    } else {
      throw ParseError("unknown operation '" + name + "'", lineno, 1);
    }
    if (tok.size() != arity + 1) {
      throw ParseError(name + " takes " + std::to_string(arity) + " vertex argument(s)",
                       lineno);
    }
    GraphOp op{kind, parse_count(tok[1], lineno), 0};
    if (arity == 2) op.w = parse_count(tok[2], lineno);
    const std::size_t limit = trace.initial_vertices();
    if (op.v >= limit || (arity == 2 && op.w >= limit)) {
      throw ParseError("vertex index out of range for " + std::to_string(limit) +
                           " initial vertices",
                       lineno);
    }
    if (arity == 2 && op.v == op.w) {
      throw ParseError(name + " needs two distinct vertices", lineno);
    }
    trace.ops.push_back(op);
  }
  if (!header) throw ParseError("missing TRACE header", lineno == 0 ? 1 : lineno);
  return trace;
}

}  // namespace ecsynth
