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

#include "ecsynth/oracle/ec_table.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

#include "ecsynth/error.hpp"
#include "ecsynth/kernels/frontier.hpp"

namespace ecsynth {

namespace {

using kernels::State;
using Rows = std::array<std::uint8_t, kOracleMaxOrder + 1>;

constexpr std::size_t pair_bit(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

std::size_t code_bits(std::size_t n) { return n * (n - 1) / 2; }

Rows decode_rows(GraphCode code, std::size_t n) {
  Rows rows{};
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if ((code >> pair_bit(i, j)) & 1) {
        rows[i] |= static_cast<std::uint8_t>(1u << j);
        rows[j] |= static_cast<std::uint8_t>(1u << i);
      }
    }
  }
  return rows;
}

GraphCode encode_rows(const Rows& rows, std::size_t n) {
  GraphCode code = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if ((rows[i] >> j) & 1) code |= GraphCode{1} << pair_bit(i, j);
    }
  }
  return code;
}

// Toggles every pair {x, y} with [x in a][y in b] + [x in b][y in a] odd.
void toggle_between(Rows& rows, std::size_t n, std::uint8_t a, std::uint8_t b) {
  for (std::size_t x = 0; x < n; ++x) {
    std::uint8_t t = 0;
    if ((a >> x) & 1) t ^= b;
    if ((b >> x) & 1) t ^= a;
    t = static_cast<std::uint8_t>(t & ~(1u << x));
    rows[x] ^= t;
  }
}

void lc_rows(Rows& rows, std::size_t n, std::size_t v) {
  const std::uint8_t nb = rows[v];
  for (std::size_t x = 0; x < n; ++x) {
    if ((nb >> x) & 1) rows[x] ^= static_cast<std::uint8_t>(nb & ~(1u << x));
  }
}

void ec2_rows(Rows& rows, std::size_t v, std::size_t w) {
  const std::uint8_t star = static_cast<std::uint8_t>(rows[w] & ~(1u << v));
  rows[v] ^= star;
  for (std::size_t u = 0; u < 8; ++u) {
    if ((star >> u) & 1) rows[u] ^= static_cast<std::uint8_t>(1u << v);
  }
}

struct LcMoves {
  std::size_t n;
  void operator()(State s, std::vector<State>& out) const {
    const Rows rows = decode_rows(s, n);
    for (std::size_t v = 0; v < n; ++v) {
      Rows r = rows;
      lc_rows(r, n, v);
      out.push_back(encode_rows(r, n));
    }
  }
};

struct CostMoves {
  std::size_t n;
  void operator()(State s, std::vector<State>& out) const {
    const Rows rows = decode_rows(s, n);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w = 0; w < n; ++w) {
        if (v == w) continue;
        if (v < w) {
          out.push_back(s ^ (State{1} << pair_bit(v, w)));
          if (!((rows[v] >> w) & 1)) {
            Rows r = rows;
            toggle_between(r, n, rows[v], rows[w]);
            out.push_back(encode_rows(r, n));
          }
        }
        Rows r = rows;
        ec2_rows(r, v, w);
        out.push_back(encode_rows(r, n));
      }
    }
  }
};

// Cost layers over a state space, each closed under the free moves.
template <class Free, class Cost>
std::vector<std::int8_t> layered_bfs(std::size_t states, std::vector<State> seeds,
                                     const Free& free, const Cost& cost, bool parallel) {
  std::vector<std::int8_t> dist(states, -1);
  auto expand = [&](const std::vector<State>& from, const auto& moves) {
    return parallel ? kernels::expand_frontier_parallel(from, dist, moves)
                    : kernels::expand_frontier_serial(from, dist, moves);
  };
  // Marks the seeds and everything freely reachable from them with `level`
  // and returns the whole layer.
  auto close = [&](std::vector<State> queue, std::int8_t level) {
    std::vector<State> layer;
    while (!queue.empty()) {
      for (State s : queue) dist[s] = level;
      layer.insert(layer.end(), queue.begin(), queue.end());
      queue = expand(queue, free);
    }
    return layer;
  };
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  std::vector<State> layer = close(std::move(seeds), 0);
  for (std::int8_t level = 1; !layer.empty(); ++level) {
    layer = close(expand(layer, cost), level);
  }
  return dist;
}

void check_order(std::size_t n, std::size_t guard) {
  if (n > guard || n > kOracleMaxOrder) {
    throw GuardError("oracle: order " + std::to_string(n) + " exceeds guard " +
                     std::to_string(std::min(guard, kOracleMaxOrder)));
  }
}

}  // namespace

GraphCode encode_graph(const Graph& g) {
  check_order(g.order(), kOracleMaxOrder);
  GraphCode code = 0;
  for (const auto& [i, j] : g.edges()) {
    code |= GraphCode{1} << pair_bit(std::min(i, j), std::max(i, j));
  }
  return code;
}

Graph decode_graph(GraphCode code, std::size_t n) {
  check_order(n, kOracleMaxOrder);
  Graph g(n);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if ((code >> pair_bit(i, j)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

GraphCode apply_code(GraphCode code, std::size_t n, const GraphOp& op) {
  check_order(n, kOracleMaxOrder);
  Rows rows = decode_rows(code, n);
  switch (op.kind) {
    case OpKind::LC:
      lc_rows(rows, n, op.v);
      break;
    case OpKind::EC1:
      return code ^ (GraphCode{1} << pair_bit(std::min(op.v, op.w), std::max(op.v, op.w)));
    case OpKind::EC2:
      ec2_rows(rows, op.v, op.w);
      break;
    case OpKind::EC3:
      if ((rows[op.v] >> op.w) & 1) return code;
      toggle_between(rows, n, rows[op.v], rows[op.w]);
      break;
    case OpKind::Delete:
      throw PreconditionError("apply_code: deletion changes the order");
  }
  return encode_rows(rows, n);
}

int EcTable::lookup(const Graph& g) const {
  if (g.order() != n) throw PreconditionError("EcTable::lookup: order mismatch");
  return dist.at(encode_graph(g));
}

std::size_t EcTable::max() const {
  std::int8_t m = 0;
  for (std::int8_t d : dist) m = std::max(m, d);
  return static_cast<std::size_t>(m);
}

std::vector<std::size_t> EcTable::histogram() const {
  std::vector<std::size_t> h(max() + 1, 0);
  for (std::int8_t d : dist) {
    if (d < 0) throw Error("EcTable: unreachable graph in table");
    ++h[static_cast<std::size_t>(d)];
  }
  return h;
}

EcTable exact_ec_all(std::size_t n, const OracleOptions& options) {
  check_order(n, options.guard);
  EcTable t;
  t.n = n;
  t.dist = layered_bfs(std::size_t{1} << code_bits(n), {0}, LcMoves{n}, CostMoves{n},
                       options.parallel);
  return t;
}

std::size_t exact_ec(const Graph& g, std::size_t guard) {
  check_order(g.order(), guard);
  static std::mutex mu;
  static std::map<std::size_t, EcTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g.order());
  if (it == cache.end()) {
    OracleOptions opts;
    opts.guard = guard;
    it = cache.emplace(g.order(), exact_ec_all(g.order(), opts)).first;
  }
  return static_cast<std::size_t>(it->second.lookup(g));
}

AncillaCheck ancilla_cross_check(std::size_t n, bool parallel) {
  if (n > 5) throw GuardError("ancilla_cross_check supports n <= 5");
  // States [0, big) are graphs on n+1 vertices, [big, big + small) graphs
  // on n vertices. Deleting vertex n is a free move between the two; by
  // symmetry of labels it stands in for deleting any vertex.
  const std::size_t big = std::size_t{1} << code_bits(n + 1);
  const std::size_t small = std::size_t{1} << code_bits(n);
  const auto offset = static_cast<State>(big);
  const auto low_mask = static_cast<State>(small - 1);
  auto free = [&](State s, std::vector<State>& out) {
    if (s < offset) {
      std::vector<State> tmp;
      LcMoves{n + 1}(s, tmp);
      out.insert(out.end(), tmp.begin(), tmp.end());
      out.push_back(offset + (s & low_mask));
    } else {
      std::vector<State> tmp;
      LcMoves{n}(s - offset, tmp);
      for (State t : tmp) out.push_back(offset + t);
    }
  };
  auto cost = [&](State s, std::vector<State>& out) {
    std::vector<State> tmp;
    if (s < offset) {
      CostMoves{n + 1}(s, tmp);
      out.insert(out.end(), tmp.begin(), tmp.end());
    } else {
      CostMoves{n}(s - offset, tmp);
      for (State t : tmp) out.push_back(offset + t);
    }
  };
  const auto with = layered_bfs(big + small, {0, offset}, free, cost, parallel);
  const EcTable without = exact_ec_all(n, {kOracleMaxOrder, parallel});

  AncillaCheck out;
  out.n = n;
  out.max_without = without.max();
  for (std::size_t s = 0; s < small; ++s) {
    const auto d = static_cast<std::size_t>(with[big + s]);
    out.max_with = std::max(out.max_with, d);
    if (d < static_cast<std::size_t>(without.dist[s])) ++out.improved;
  }
  return out;
}

std::size_t reference_max_ec(std::size_t n) {
  static constexpr std::array<std::size_t, 7> kTable{0, 0, 1, 2, 3, 5, 7};
  if (n == 0 || n >= kTable.size()) throw PreconditionError("reference values cover n = 1..6");
  return kTable[n];
}

}  // namespace ecsynth
