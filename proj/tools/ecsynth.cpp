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

#include <CLI11.hpp>

#include <iostream>

#include "ecsynth/error.hpp"
#include "run_config.hpp"

using ecsynth::cli::RunConfig;

namespace {

namespace cli = ecsynth::cli;

const std::vector<std::string> kStrategies{"auto", "rankwidth", "code", "trivial"};

void add_graph_input(CLI::App* sub, RunConfig& cfg, const std::string& what) {
  sub->add_option("graph", cfg.inputs, what + " (edge list or graph6; '-' for stdin)")
      ->required()
      ->expected(1);
}

void add_artifacts(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--trace-out", cfg.trace_out, "Write the operation trace here");
  sub->add_option("--circuit-out", cfg.circuit_out, "Write the compiled circuit here");
}

void add_word_input(CLI::App* sub, RunConfig& cfg) {
  auto* file = sub->add_option("word", cfg.inputs, "Double occurrence word file ('-' for stdin)")
                   ->expected(1);
  auto* random = sub->add_option("--random", cfg.random_n, "Use a random word on N letters")
                     ->check(CLI::PositiveNumber);
  file->excludes(random);
  sub->add_option("--word-out", cfg.word_out, "Write the word used here");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph-state synthesis with cost-one edge operations"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string strategy = "auto";
  std::string format = "text";
  std::string input_format = "auto";
  app.add_option("--strategy", strategy, "Dependent-set strategy")
      ->check(CLI::IsMember(kStrategies))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "kv"}))
      ->capture_default_str();
  app.add_option("--max-n-exact", cfg.max_n_exact, "Largest order for exact rank-width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-n-code", cfg.max_n_code, "Largest order for code-guided sets")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--input-format", input_format, "Graph input format")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}))
      ->capture_default_str();
  bool timing = false;
  app.add_flag("--timing", timing, "Include wall-clock times in the output");

  auto* synth = app.add_subcommand("synth", "Synthesize a graph and certify the trace");
  add_graph_input(synth, cfg, "Target graph");
  add_artifacts(synth, cfg);

  auto* verify = app.add_subcommand("verify", "Replay a trace and simulate its circuit");
  std::string verify_trace;
  std::string verify_graph;
  verify->add_option("trace", verify_trace, "Trace file")->required();
  verify->add_option("graph", verify_graph, "Target graph")->required();
  verify->add_option("--measure", cfg.measure, "Outcome for random measurements")
      ->check(CLI::IsMember({"zero", "one", "random"}))
      ->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Exact distances by exhaustive search");
  auto* oracle_n =
      oracle->add_option("--n", cfg.oracle_n, "Tabulate every graph on n vertices")
          ->check(CLI::Range(1, static_cast<int>(ecsynth::kOracleMaxOrder)));
  auto* oracle_graph = oracle->add_option("--graph", cfg.inputs, "Distance of one graph")
                           ->expected(1);
  oracle_n->excludes(oracle_graph);
  oracle->add_option("--guard", cfg.oracle_guard, "Largest order to search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  oracle->add_flag("--ancilla", cfg.ancilla_check, "Also search with one deleted ancilla");

  auto* rankwidth = app.add_subcommand("rankwidth", "Rank-width and a decomposition");
  add_graph_input(rankwidth, cfg, "Graph");

  auto* words = app.add_subcommand("words", "Double occurrence word graphs");
  words->require_subcommand(1);
  auto* build = words->add_subcommand("build", "Print the graph of a word as an edge list");
  add_word_input(build, cfg);
  build->add_option("--class", cfg.word_class, "Graph class")
      ->check(CLI::IsMember({"interval", "circle", "containment"}))
      ->capture_default_str();
  std::vector<CLI::App*> word_synths;
  for (const char* name : {"synth-interval", "synth-circle", "synth-containment"}) {
    auto* sub = words->add_subcommand(name, std::string("Word synthesis: ") + (name + 6));
    add_word_input(sub, cfg);
    add_artifacts(sub, cfg);
    word_synths.push_back(sub);
  }

  auto* clifford = app.add_subcommand("clifford", "Two-qubit Clifford classes");
  clifford->require_subcommand(1);
  auto* classify = clifford->add_subcommand("classify", "Count the four classes");
  auto* decompose = clifford->add_subcommand("decompose", "Decompose a 4x4 symplectic matrix");
  decompose->add_option("matrix", cfg.inputs, "Matrix file, 16 bits row by row")
      ->required()
      ->expected(1);
  decompose->add_option("--circuit-out", cfg.circuit_out, "Write the circuit here");

  auto* code = app.add_subcommand("code", "Graph code tools");
  code->require_subcommand(1);
  auto* mindist = code->add_subcommand("mindist", "Minimum distance of the graph code");
  add_graph_input(mindist, cfg, "Graph");

  auto* bench = app.add_subcommand("bench", "Cost and timing tables over generated families");
  bench->add_option("suite", cfg.inputs, "trees, cycles, words or random")
      ->required()
      ->expected(1)
      ->check(CLI::IsMember({"trees", "cycles", "words", "random"}));
  bool no_timing = false;
  bench->add_flag("--no-timing", no_timing, "Leave out the seconds column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code_ = app.exit(e);
    return code_ == 0 ? cli::kOk : cli::kParseError;
  }

  cfg.strategy = *ecsynth::parse_strategy(strategy);
  cfg.format = format == "kv" ? cli::OutputFormat::KeyValue : cli::OutputFormat::Text;
  cfg.input_format = input_format == "graph6"     ? cli::InputFormat::Graph6
                     : input_format == "edgelist" ? cli::InputFormat::EdgeList
                                                  : cli::InputFormat::Auto;
  cfg.timing = timing;
  if (verify->parsed()) cfg.inputs = {verify_trace, verify_graph};

  try {
    if (synth->parsed()) return cli::cmd_synth(cfg);
    if (verify->parsed()) return cli::cmd_verify(cfg);
    if (oracle->parsed()) {
      if (!oracle_n->count() && !oracle_graph->count()) {
        std::cerr << "error: oracle needs --n or --graph\n";
        return cli::kParseError;
      }
      return cli::cmd_oracle(cfg);
    }
    if (rankwidth->parsed()) return cli::cmd_rankwidth(cfg);
    if (words->parsed()) {
      if (build->parsed()) {
        cfg.command = "build";
      } else {
        for (auto* sub : word_synths) {
          if (sub->parsed()) cfg.command = sub->get_name();
        }
      }
      return cli::cmd_words(cfg);
    }
    if (clifford->parsed()) {
      cfg.command = classify->parsed() ? "classify" : "decompose";
      return cli::cmd_clifford(cfg);
    }
    if (mindist->parsed()) return cli::cmd_code(cfg);
    if (bench->parsed()) {
      cfg.timing = !no_timing;
      return cli::cmd_bench(cfg);
    }
  } catch (const cli::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kParseError;
  } catch (const ecsynth::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kFailure;
  }
  return cli::kFailure;
}
