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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <unordered_map>

#include "ecsynth/codes/additive_code.hpp"
#include "ecsynth/oracle/ec_table.hpp"
#include "ecsynth/rankwidth/cutrank.hpp"
#include "ecsynth/rankwidth/decomposition.hpp"
#include "ecsynth/synthesis/synth.hpp"
#include "ecsynth/tableau/compile.hpp"
#include "ecsynth/tableau/two_qubit.hpp"
#include "ecsynth/words/tour_graph.hpp"
#include "ecsynth/words/word_synth.hpp"
#include "support/test_support.hpp"

using namespace ecsynth;
using ecsynth::testing::Rng;
using ecsynth::testing::uniform;

namespace {

// Outcome of one criterion; `note` is printed after the verdict.
struct Verdict {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool run(int id, const char* title, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto t0 = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  std::printf("%s %2d %s (%.1fs) %s\n", v.pass ? "PASS" : "FAIL", id, title, seconds_since(t0),
              v.note.str().c_str());
  std::fflush(stdout);
  return v.pass;
}

SynthOptions with_strategy(DependentStrategy s) {
  SynthOptions o;
  o.strategy = s;
  return o;
}

Graph symmetric_difference(const Graph& a, const Graph& b) {
  Graph out(a.order());
  for (Vertex u = 0; u < a.order(); ++u) {
    for (Vertex v = u + 1; v < a.order(); ++v) {
      if (a.adjacent(u, v) != b.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

std::size_t min_degree(const Graph& g) {
  std::size_t d = g.order();
  for (Vertex v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

void oracle_maxima(Verdict& v) {
  const std::size_t expected[] = {0, 1, 2, 3, 5, 7};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto t0 = Clock::now();
    const EcTable t = exact_ec_all(n);
    const double secs = seconds_since(t0);
    v.note << "n=" << n << ":" << t.max() << " ";
    v.require(t.max() == expected[n - 1], "max distance at n=" + std::to_string(n));
    if (n == 6) v.require(secs <= 600.0, "n=6 took longer than ten minutes");
  }
}

void clifford_classes(Verdict& v) {
  const ClassCounts c = enumerate_two_qubit_classes();
  v.note << c.a << "/" << c.b << "/" << c.c << "/" << c.d << " total " << c.total << " ";
  v.require(c.a == 36 && c.b == 324 && c.c == 324 && c.d == 36 && c.total == 720,
            "class counts");
  std::size_t round_trips = 0;
  for (std::uint32_t key = 0; key < (1u << 16); ++key) {
    f2::BitMatrix m(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t col = 0; col < 4; ++col) m.set(r, col, (key >> (4 * r + col)) & 1);
    }
    if (!Symplectic2Q::is_symplectic(m)) continue;
    const Circuit d = decompose_two_qubit(Symplectic2Q(m));
    v.require(symplectic_action(d) == m, "round trip of key " + std::to_string(key));
    v.require(d.count(GateKind::CZ) <= 1 && d.count(GateKind::SWAP) <= 1,
              "gate budget of key " + std::to_string(key));
    ++round_trips;
  }
  v.note << "round trips " << round_trips;
  v.require(round_trips == 720, "720 matrices");
}

void cycles(Verdict& v) {
  const std::size_t expected[] = {2, 3, 5, 6};
  for (std::size_t n = 3; n <= 6; ++n) {
    const std::size_t d = exact_ec(Graph::cycle(n));
    v.note << "C" << n << "=" << d << " ";
    v.require(d == expected[n - 3], "C" + std::to_string(n));
  }
}

void interval_words(Verdict& v) {
  Rng rng(1004);
  const auto t0 = Clock::now();
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = uniform(rng, 1, 200);
    const DOWord w = random_word(n, rng());
    const SynthResult r = synth_interval(w);
    v.require(r.cost == 2 * n - 2, "interval cost at n=" + std::to_string(n));
    v.require(replay(r.trace) == interval_graph(w), "interval replay");
  }
  v.require(seconds_since(t0) <= 60.0, "runtime over one minute");
}

void circle_words(Verdict& v) {
  Rng rng(1005);
  const auto t0 = Clock::now();
  std::size_t worst_slack = ~std::size_t{0};
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = uniform(rng, 1, 100);
    const DOWord w = random_word(n, rng());
    const SynthResult r = synth_circle(w);
    const std::size_t bound = circle_cost_bound(n);
    v.require(r.cost <= bound, "circle cost at n=" + std::to_string(n));
    worst_slack = std::min(worst_slack, bound - std::min(bound, r.cost));
    v.require(replay(r.trace) == circle_graph(w), "circle replay");
    for (std::size_t d : r.rerouted_degrees) {
      v.require(d <= moore_degree_bound(n), "rerouted degree at n=" + std::to_string(n));
    }
  }
  v.note << "least slack " << worst_slack << " ";
  v.require(seconds_since(t0) <= 120.0, "runtime over two minutes");
}

void containment_words(Verdict& v) {
  Rng rng(1005);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = uniform(rng, 1, 100);
    const DOWord w = random_word(n, rng());
    const SynthResult iv = synth_interval(w);
    const SynthResult ci = synth_circle(w);
    const SynthResult co = synth_containment(w);
    v.require(co.cost == iv.cost + ci.cost + n, "containment cost at n=" + std::to_string(n));
    v.require(replay(co.trace) == containment_graph(w), "containment replay");
    v.require(containment_graph(w) == symmetric_difference(interval_graph(w), circle_graph(w)),
              "containment is interval xor circle");
  }
}

void rankwidth_truths(Verdict& v) {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Graph g = ecsynth::testing::graph_from_mask(4, mask);
    const std::size_t w = exact_rankwidth(g).width;
    v.require(w <= 1, "4-vertex graph " + std::to_string(mask));
    if (g.connected()) v.require(w == 1, "connected 4-vertex graph " + std::to_string(mask));
  }
  v.require(exact_rankwidth(Graph::cycle(4)).width == 1, "C4");
  v.require(exact_rankwidth(Graph::cycle(5)).width == 2, "C5");
  Rng rng(1007);
  std::size_t trees = 0;
  for (std::size_t n = 2; n <= 13; ++n) {
    for (int k = 0; k < 20; ++k) {
      v.require(exact_rankwidth(ecsynth::testing::random_tree(rng, n)).width == 1,
                "tree at n=" + std::to_string(n));
      ++trees;
    }
    v.require(exact_rankwidth(Graph::path(n)).width == 1, "path");
    v.require(exact_rankwidth(Graph::star(n - 1)).width == 1, "star");
  }
  v.note << trees << " random trees plus paths and stars";
}

void lower_bound(Verdict& v) {
  Rng rng(1008);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = uniform(rng, 2, 13);
    const Graph g =
        ecsynth::testing::random_connected_graph(rng, n, uniform(rng, 0, 6) / 10.0);
    const std::size_t rw = exact_rankwidth(g).width;
    const SynthResult r = synth(g);
    v.require(replay(r.trace) == g, "replay");
    v.require(r.cost + 2 >= n + rw, "cost below n + rw - 2 at n=" + std::to_string(n));
  }
}

void trees(Verdict& v) {
  Rng rng(1009);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = uniform(rng, 2, 50);
    const Graph t = ecsynth::testing::random_tree(rng, n);
    const SynthResult r = synth(t);
    v.require(replay(r.trace) == t, "replay");
    v.require(r.cost == n - 1, "tree cost at n=" + std::to_string(n));
  }
}

void generic_bound(Verdict& v) {
  Rng rng(1010);
  const auto code = with_strategy(DependentStrategy::CodeGuided);
  auto check = [&](std::size_t max_n, int count) {
    for (int trial = 0; trial < count; ++trial) {
      const std::size_t n = uniform(rng, 1, max_n);
      const Graph g = ecsynth::testing::random_graph(rng, n, uniform(rng, 1, 9) / 10.0);
      const SynthResult r = synth(g, code);
      v.require(replay(r.trace) == g, "replay");
      v.require(6 * r.cost <= (n - 1) * (n + 4), "generic bound at n=" + std::to_string(n));
    }
  };
  check(7, 1000);
  check(14, 500);
}

void property_suites(Verdict& v) {
  Rng rng(1011);
  std::size_t lc = 0;
  for (; lc < 1000; ++lc) {
    const std::size_t n = uniform(rng, 2, 12);
    const Graph g = ecsynth::testing::random_graph(rng, n);
    const auto s = ecsynth::testing::random_subset(rng, n);
    v.require(cutrank(local_complement(g, uniform(rng, 0, n - 1)), s) == cutrank(g, s),
              "cut-rank LC invariance");
  }

  std::size_t same = 0;
  std::size_t crossing = 0;
  while (same < 1000 || crossing < 1000) {
    const std::size_t n = uniform(rng, 2, 12);
    const Graph g = ecsynth::testing::random_graph(rng, n);
    const Vertex a = uniform(rng, 0, n - 1);
    Vertex b = uniform(rng, 0, n - 2);
    if (b >= a) ++b;
    std::vector<GraphOp> ops{GraphOp::ec1(a, b), GraphOp::ec2(a, b)};
    if (!g.adjacent(a, b)) ops.push_back(GraphOp::ec3(a, b));
    const auto s = ecsynth::testing::random_subset(rng, n);
    const bool in_a = std::find(s.begin(), s.end(), a) != s.end();
    const bool in_b = std::find(s.begin(), s.end(), b) != s.end();
    const long before = static_cast<long>(cutrank(g, s));
    for (const GraphOp& op : ops) {
      const long after = static_cast<long>(cutrank(apply_op(g, op), s));
      if (in_a == in_b) {
        v.require(after == before, "same-side delta");
        ++same;
      } else {
        v.require(std::abs(after - before) <= 1, "crossing delta");
        ++crossing;
      }
    }
  }

  std::size_t grown = 0;
  while (grown < 1000) {
    const std::size_t n = uniform(rng, 2, 12);
    const Graph g = ecsynth::testing::random_graph(rng, n, uniform(rng, 1, 9) / 10.0);
    const auto dep = make_dependent_set(g, ecsynth::testing::random_subset(rng, n));
    if (!dep) continue;
    const GrowStep step = grow_vertex(g, *dep);
    Graph h = g;
    h.isolate(step.vertex);
    for (const GraphOp& op : step.ops) apply_op_in_place(h, op);
    v.require(h == g, "grow_vertex replay");
    v.require(step.cost + 1 <= dep->vertices.size(), "grow_vertex cost");
    ++grown;
  }

  std::size_t reversals = 0;
  for (; reversals < 1000; ++reversals) {
    const DOWord w = random_word(uniform(rng, 1, 25), rng());
    const Vertex x = uniform(rng, 0, w.order() - 1);
    v.require(circle_graph(w.reversed_between(x)) == local_complement(circle_graph(w), x),
              "word reversal");
  }

  std::size_t b4 = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ecsynth::testing::pair_count(n));
         ++mask) {
      const Graph g = ecsynth::testing::graph_from_mask(n, mask);
      std::vector<std::uint64_t> supports;
      for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << n); ++sub) {
        std::uint64_t z = 0;
        for (Vertex i = 0; i < n; ++i) {
          if (!((sub >> i) & 1)) continue;
          for (Vertex u : g.neighbours(i)) z ^= std::uint64_t{1} << u;
        }
        supports.push_back(sub | z);
      }
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const auto set = ecsynth::testing::mask_vertices(s, n);
        const bool dependent = cutrank(g, set) < set.size();
        const bool covers = std::any_of(supports.begin(), supports.end(),
                                        [&](std::uint64_t c) { return (c & ~s) == 0; });
        v.require(dependent == covers, "dependent iff covers a codeword support");
        ++b4;
      }
    }
  }

  std::size_t mind = 0;
  for (; mind < 1000; ++mind) {
    const std::size_t n = uniform(rng, 1, 12);
    const Graph g = ecsynth::testing::random_graph(rng, n, uniform(rng, 1, 9) / 10.0);
    v.require(min_distance(code_from_graph(g)).distance <= mind_bound(n), "distance bound");
  }

  std::size_t orbit_cases = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::unordered_map<Graph, std::size_t, GraphHash> orbit_min;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ecsynth::testing::pair_count(n));
         ++mask) {
      const Graph g = ecsynth::testing::graph_from_mask(n, mask);
      if (!orbit_min.count(g)) {
        const auto orbit = lc_orbit(g);
        std::size_t m = n;
        for (const Graph& h : orbit) m = std::min(m, min_degree(h));
        for (const Graph& h : orbit) orbit_min.emplace(h, m);
      }
      v.require(min_distance(code_from_graph(g), kMinDistanceGuard, false).distance ==
                    1 + orbit_min.at(g),
                "distance equals one plus least orbit degree");
      ++orbit_cases;
    }
  }

  v.note << "lc " << lc << ", deltas " << same << "+" << crossing << ", grow " << grown
         << ", reversal " << reversals << ", dependence " << b4 << ", distance " << mind
         << ", orbit " << orbit_cases;
  for (std::size_t count : {lc, same, crossing, grown, reversals, b4, mind, orbit_cases}) {
    v.require(count >= 1000, "suite below 1000 cases");
  }
}

void end_to_end(Verdict& v) {
  Rng rng(1012);
  std::size_t exact_before = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = uniform(rng, 1, 10);
    const Graph g = ecsynth::testing::random_graph(rng, n, uniform(rng, 1, 9) / 10.0);
    const SynthResult r = synth(g);
    const Simulation sim = simulate(trace_to_circuit(r.trace));
    const GraphStateReport rep = check_graph_state(sim.state, g);
    v.require(rep.matrix_match, "graph state match: " + rep.detail);
    if (!rep.matrix_match) continue;
    exact_before += rep.signs_match ? 1 : 0;
    if (trial < 20) {
      Tableau fixed = sim.state;
      for (std::size_t q = 0; q < n; ++q) {
        if (rep.correction.get(q)) fixed.pauli_x(q);
      }
      for (std::size_t q = 0; q < n; ++q) {
        if (rep.correction.get(n + q)) fixed.pauli_z(q);
      }
      v.require(check_graph_state(fixed, g).signs_match, "exact signs after correction");
    }
  }
  v.note << exact_before << "/100 exact before correction";
}

}  // namespace

int main() {
  bool all = true;
  all &= run(1, "oracle maxima n=1..6", oracle_maxima);
  all &= run(2, "two-qubit Clifford classes", clifford_classes);
  all &= run(3, "cycle distances", cycles);
  all &= run(4, "interval word synthesis", interval_words);
  all &= run(5, "circle word synthesis", circle_words);
  all &= run(6, "containment word synthesis", containment_words);
  all &= run(7, "rank-width ground truths", rankwidth_truths);
  all &= run(8, "lower-bound certificate", lower_bound);
  all &= run(9, "trees at n-1", trees);
  all &= run(10, "code-guided generic bound", generic_bound);
  all &= run(11, "property suites", property_suites);
  all &= run(12, "end-to-end circuit verification", end_to_end);
  return all ? 0 : 1;
}
