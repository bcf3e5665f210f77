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

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "ecsynth/codes/additive_code.hpp"
#include "ecsynth/error.hpp"
#include "ecsynth/graph/graph_io.hpp"
#include "ecsynth/synthesis/synth.hpp"
#include "ecsynth/tableau/compile.hpp"
#include "ecsynth/tableau/two_qubit.hpp"
#include "ecsynth/words/tour_graph.hpp"
#include "ecsynth/words/word_synth.hpp"
#include "run_config.hpp"

namespace ecsynth::cli {

namespace {

template <typename T>
T parse_or_throw(const std::string& path, const std::string& text, T (*parse)(const std::string&)) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Graph load_graph(const std::string& path, InputFormat format) {
  const std::string text = read_input(path);
  try {
    GraphFormat f = GraphFormat::EdgeList;
    switch (format) {
      case InputFormat::Auto: f = sniff_graph_format(text); break;
      case InputFormat::EdgeList: f = GraphFormat::EdgeList; break;
      case InputFormat::Graph6: f = GraphFormat::Graph6; break;
    }
    return parse_graph(text, f);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

OpTrace load_trace(const std::string& path) {
  return parse_or_throw<OpTrace>(path, read_input(path), &parse_trace);
}

// A word from the first input, or a random one when --random is set.
DOWord load_word(const RunConfig& cfg) {
  DOWord w;
  if (cfg.random_n > 0) {
    w = random_word(cfg.random_n, cfg.seed);
  } else {
    if (cfg.inputs.empty()) throw InputError("a word file or --random is required");
    w = parse_or_throw<DOWord>(cfg.inputs[0], read_input(cfg.inputs[0]), &parse_word);
  }
  if (!cfg.word_out.empty()) write_output(cfg.word_out, serialize_word(w));
  return w;
}

void print(const Report& r) { std::cout << r.str(); }

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

std::string pauli_string(const f2::BitVector& xz, std::size_t n) {
  std::string out;
  for (std::size_t q = 0; q < n; ++q) {
    const bool x = xz.get(q);
    const bool z = xz.get(n + q);
    out += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return out;
}

// Certifies, writes artifacts and prints the stats block.
int finish_synthesis(const RunConfig& cfg, const Graph& g, const SynthResult& res) {
  const CertificateReport rep = certify(g, res, cfg.max_n_exact);
  if (!cfg.trace_out.empty()) write_output(cfg.trace_out, serialize_trace(res.trace));
  if (!cfg.circuit_out.empty()) {
    write_output(cfg.circuit_out, serialize_circuit(trace_to_circuit(res.trace)));
  }
  Report r(cfg.format);
  r.add_block(format_stats(g, res, &rep, cfg.timing));
  if (!rep.replay_error.empty()) r.add("replay_error", rep.replay_error);
  print(r);
  return rep.ok() ? kOk : kVerifyError;
}

SynthOptions synth_options(const RunConfig& cfg) {
  SynthOptions o;
  o.strategy = cfg.strategy;
  o.max_n_exact = cfg.max_n_exact;
  o.max_n_code = cfg.max_n_code;
  return o;
}

// Fixed-column table for bench output.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str(OutputFormat format, const std::string& suite) const {
    std::ostringstream out;
    if (format == OutputFormat::KeyValue) {
      for (const auto& row : rows) {
        out << "suite=" << suite;
        for (std::size_t c = 0; c < header.size(); ++c) out << ' ' << header[c] << '=' << row[c];
        out << '\n';
      }
      return out.str();
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      width[c] = header[c].size();
      for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << cells[c];
      }
      out << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
    return out.str();
  }
};

Graph random_tree(std::mt19937_64& rng, std::size_t n) {
  Graph t(n);
  for (Vertex v = 1; v < n; ++v) {
    t.add_edge(v, std::uniform_int_distribution<Vertex>(0, v - 1)(rng));
  }
  // Relabel so vertex 0 is not always the root.
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph out(n);
  for (const auto& [u, v] : t.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

std::string seconds(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << s;
  return out.str();
}

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int cmd_synth(const RunConfig& cfg) {
  const Graph g = load_graph(cfg.inputs.at(0), cfg.input_format);
  return finish_synthesis(cfg, g, synth(g, synth_options(cfg)));
}

int cmd_verify(const RunConfig& cfg) {
  const OpTrace trace = load_trace(cfg.inputs.at(0));
  const Graph g = load_graph(cfg.inputs.at(1), cfg.input_format);
  Report r(cfg.format);
  r.add("n", std::to_string(g.order()));
  r.add("cost", std::to_string(trace.cost()));
  Graph built;
  try {
    built = replay(trace);
  } catch (const ReplayError& e) {
    r.add("replay", "error");
    r.add("replay_error", e.what());
    r.add("result", "mismatch");
    print(r);
    return kVerifyError;
  }
  if (built != g) {
    r.add("replay", "mismatch");
    r.add("result", "mismatch");
    print(r);
    return kVerifyError;
  }
  r.add("replay", "ok");
  MeasurePolicy policy = MeasurePolicy::ForceZero;
  if (cfg.measure == "one") policy = MeasurePolicy::ForceOne;
  if (cfg.measure == "random") policy = MeasurePolicy::Random;
  const Circuit c = trace_to_circuit(trace);
  r.add("qubits", std::to_string(c.qubits));
  r.add("cz", std::to_string(c.count(GateKind::CZ)));
  const GraphStateReport rep = verify_trace(trace, g, policy, cfg.seed);
  if (!rep.matrix_match) {
    r.add("detail", rep.detail);
    r.add("result", "mismatch");
    print(r);
    return kVerifyError;
  }
  r.add("correction", pauli_string(rep.correction, g.order()));
  r.add("result", rep.signs_match ? "match" : "match-up-to-Pauli");
  print(r);
  return kOk;
}

int cmd_oracle(const RunConfig& cfg) {
  Report r(cfg.format);
  if (!cfg.inputs.empty()) {
    const Graph g = load_graph(cfg.inputs[0], cfg.input_format);
    r.add("n", std::to_string(g.order()));
    r.add("dist", std::to_string(exact_ec(g, cfg.oracle_guard)));
    print(r);
    return kOk;
  }
  const std::size_t n = cfg.oracle_n;
  OracleOptions opts;
  opts.guard = cfg.oracle_guard;
  const auto t0 = Clock::now();
  const EcTable t = exact_ec_all(n, opts);
  const double secs = since(t0);
  r.add("n", std::to_string(n));
  r.add("max", std::to_string(t.max()));
  bool agrees = true;
  if (n >= 1 && n <= 6) {
    const std::size_t ref = reference_max_ec(n);
    agrees = ref == t.max();
    r.add("reference", std::to_string(ref));
    r.add("agrees", agrees ? "true" : "false");
  }
  const auto h = t.histogram();
  for (std::size_t d = 0; d < h.size(); ++d) {
    r.add("histogram." + std::to_string(d), std::to_string(h[d]));
  }
  if (cfg.ancilla_check) {
    const AncillaCheck a = ancilla_cross_check(n);
    r.add("max_with_ancilla", std::to_string(a.max_with));
    r.add("improved_by_ancilla", std::to_string(a.improved));
  }
  if (cfg.timing) r.add("wall_seconds", seconds(secs));
  print(r);
  return agrees ? kOk : kVerifyError;
}

int cmd_rankwidth(const RunConfig& cfg) {
  const Graph g = load_graph(cfg.inputs.at(0), cfg.input_format);
  Report r(cfg.format);
  r.add("n", std::to_string(g.order()));
  if (g.order() <= cfg.max_n_exact) {
    const RankWidthResult res = exact_rankwidth(g, cfg.max_n_exact);
    r.add("width", std::to_string(res.width));
    r.add("exact", "true");
    r.add("decomposition", res.decomposition ? res.decomposition->to_newick() : "none");
  } else {
    const RankDecomposition d = heuristic_decomposition(g);
    r.add("width", std::to_string(width(g, d)));
    r.add("exact", "false");
    r.add("decomposition", d.to_newick());
  }
  print(r);
  return kOk;
}

int cmd_words(const RunConfig& cfg) {
  const DOWord w = load_word(cfg);
  if (cfg.command == "build") {
    Graph g;
    if (cfg.word_class == "interval") {
      g = interval_graph(w);
    } else if (cfg.word_class == "containment") {
      g = containment_graph(w);
    } else {
      g = circle_graph(w);
    }
    std::cout << serialize_graph(g, GraphFormat::EdgeList);
    return kOk;
  }
  Graph g;
  SynthResult res;
  if (cfg.command == "synth-interval") {
    g = interval_graph(w);
    res = synth_interval(w);
  } else if (cfg.command == "synth-containment") {
    g = containment_graph(w);
    res = synth_containment(w);
  } else {
    g = circle_graph(w);
    res = synth_circle(w);
  }
  // Word synthesizers only fill the generic bound.
  res.bounds = compute_bounds(g, cfg.max_n_exact);
  return finish_synthesis(cfg, g, res);
}

int cmd_clifford(const RunConfig& cfg) {
  Report r(cfg.format);
  if (cfg.command == "classify") {
    const ClassCounts c = enumerate_two_qubit_classes();
    r.add("a", std::to_string(c.a));
    r.add("b", std::to_string(c.b));
    r.add("c", std::to_string(c.c));
    r.add("d", std::to_string(c.d));
    r.add("total", std::to_string(c.total));
    print(r);
    return kOk;
  }
  const std::string path = cfg.inputs.at(0);
  const std::string text = read_input(path);
  std::uint16_t key = 0;
  std::size_t bits = 0;
  std::size_t line = 1;
  bool comment = false;
  for (char ch : text) {
    if (ch == '\n') {
      ++line;
      comment = false;
      continue;
    }
    if (comment || ch == ' ' || ch == '\t' || ch == '\r') continue;
    if (ch == '#') {
      comment = true;
      continue;
    }
    if (ch != '0' && ch != '1') {
      throw InputError(path + ": line " + std::to_string(line) + ": unexpected character '" +
                       std::string(1, ch) + "' in bit matrix");
    }
    if (bits < 16 && ch == '1') key = static_cast<std::uint16_t>(key | (1u << bits));
    ++bits;
  }
  if (bits != 16) {
    throw InputError(path + ": expected 16 matrix bits, got " + std::to_string(bits));
  }
  Symplectic2Q m;
  try {
    m = Symplectic2Q::from_key(key);
  } catch (const PreconditionError&) {
    throw InputError(path + ": matrix is not symplectic");
  }
  const Circuit c = decompose_two_qubit(m);
  r.add("class", to_string(classify(m)));
  r.add("cz", std::to_string(c.count(GateKind::CZ)));
  r.add("swap", std::to_string(c.count(GateKind::SWAP)));
  std::string gates;
  for (const Gate& g : c.gates) gates += (gates.empty() ? "" : "; ") + to_string(g);
  r.add("gates", gates.empty() ? "none" : gates);
  r.add("round_trip", symplectic_action(c) == m.matrix() ? "ok" : "failed");
  if (!cfg.circuit_out.empty()) write_output(cfg.circuit_out, serialize_circuit(c));
  print(r);
  return kOk;
}

int cmd_code(const RunConfig& cfg) {
  const Graph g = load_graph(cfg.inputs.at(0), cfg.input_format);
  Report r(cfg.format);
  const std::size_t n = g.order();
  r.add("n", std::to_string(n));
  const MinDistance d = min_distance(code_from_graph(g));
  r.add("d", std::to_string(d.distance));
  r.add("support", join(std::vector<std::size_t>(d.support.begin(), d.support.end())));
  r.add("generators", join(d.generators));
  const std::size_t bound = mind_bound(n);
  r.add("bound", std::to_string(bound));
  r.add("within_bound", d.distance <= bound ? "true" : "false");
  print(r);
  return d.distance <= bound ? kOk : kVerifyError;
}

int cmd_bench(const RunConfig& cfg) {
  const std::string& suite = cfg.inputs.at(0);
  std::mt19937_64 rng(cfg.seed);
  Table t;
  bool ok = true;
  auto timed = [&](auto&& body) {
    const auto t0 = Clock::now();
    auto out = body();
    return std::make_pair(out, since(t0));
  };
  const SynthOptions opts = synth_options(cfg);
  if (suite == "trees") {
    t.header = {"n", "cost", "expected", "ok"};
    for (std::size_t n = 5; n <= 50; n += 5) {
      const Graph g = random_tree(rng, n);
      const auto [res, secs] = timed([&] { return synth(g, opts); });
      const bool row_ok = res.cost == n - 1 && certify(g, res, cfg.max_n_exact).ok();
      ok = ok && row_ok;
      t.rows.push_back({std::to_string(n), std::to_string(res.cost), std::to_string(n - 1),
                        row_ok ? "yes" : "no"});
      if (cfg.timing) t.rows.back().push_back(seconds(secs));
    }
  } else if (suite == "cycles") {
    t.header = {"n", "cost", "lower", "ok"};
    for (std::size_t n = 5; n <= 20; ++n) {
      const Graph g = Graph::cycle(n);
      const auto [res, secs] = timed([&] { return synth(g, opts); });
      const CertificateReport rep = certify(g, res, cfg.max_n_exact);
      const bool row_ok = res.cost >= n && rep.ok();
      ok = ok && row_ok;
      t.rows.push_back({std::to_string(n), std::to_string(res.cost),
                        rep.lower ? std::to_string(*rep.lower) : "none", row_ok ? "yes" : "no"});
      if (cfg.timing) t.rows.back().push_back(seconds(secs));
    }
  } else if (suite == "words") {
    t.header = {"n", "interval", "circle", "circle_bound", "containment", "ok"};
    for (std::size_t n = 10; n <= 100; n += 10) {
      const DOWord w = random_word(n, rng());
      const auto [costs, secs] = timed([&] {
        const SynthResult iv = synth_interval(w);
        const SynthResult ci = synth_circle(w);
        const SynthResult co = synth_containment(w);
        const bool replays = replay(iv.trace) == interval_graph(w) &&
                             replay(ci.trace) == circle_graph(w) &&
                             replay(co.trace) == containment_graph(w);
        return std::array<std::size_t, 4>{iv.cost, ci.cost, co.cost, replays ? 1u : 0u};
      });
      const std::size_t bound = circle_cost_bound(n);
      const bool row_ok = costs[3] == 1 && costs[0] == 2 * n - 2 && costs[1] <= bound &&
                          costs[2] == costs[0] + costs[1] + n;
      ok = ok && row_ok;
      t.rows.push_back({std::to_string(n), std::to_string(costs[0]), std::to_string(costs[1]),
                        std::to_string(bound), std::to_string(costs[2]), row_ok ? "yes" : "no"});
      if (cfg.timing) t.rows.back().push_back(seconds(secs));
    }
  } else {
    t.header = {"n", "edges", "rankwidth", "lower", "cost", "code_cost", "upper_generic", "ok"};
    SynthOptions code = opts;
    code.strategy = DependentStrategy::CodeGuided;
    for (std::size_t n = 4; n <= 16; ++n) {
      const Graph g = random_graph(rng, n, 0.5);
      const auto [res, secs] = timed([&] { return synth(g, opts); });
      const SynthResult cres = synth(g, code);
      const CertificateReport rep = certify(g, res, cfg.max_n_exact);
      const bool row_ok = rep.ok() && certify(g, cres, cfg.max_n_exact).ok() &&
                          Rational(static_cast<std::int64_t>(cres.cost)) <= res.bounds.upper_generic;
      ok = ok && row_ok;
      const Bounds& b = res.bounds;
      t.rows.push_back({std::to_string(n), std::to_string(g.edge_count()),
                        !b.rankwidth       ? std::string("unknown")
                        : b.rankwidth_exact ? std::to_string(*b.rankwidth)
                                            : "<=" + std::to_string(*b.rankwidth),
                        b.lower ? std::to_string(*b.lower) : "none", std::to_string(res.cost),
                        std::to_string(cres.cost), b.upper_generic.to_string(),
                        row_ok ? "yes" : "no"});
      if (cfg.timing) t.rows.back().push_back(seconds(secs));
    }
  }
  if (cfg.timing) t.header.push_back("seconds");
  std::cout << t.str(cfg.format, suite);
  return ok ? kOk : kVerifyError;
}

}  // namespace ecsynth::cli
