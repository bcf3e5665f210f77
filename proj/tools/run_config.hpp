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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ecsynth/oracle/ec_table.hpp"
#include "ecsynth/rankwidth/decomposition.hpp"
#include "ecsynth/rankwidth/dependent_set.hpp"

namespace ecsynth::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kParseError = 2, kVerifyError = 3 };

/// Unreadable or malformed input; reported with exit code kParseError.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Text, KeyValue };

enum class InputFormat { Auto, EdgeList, Graph6 };

/// Everything a command reads from the command line.
struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  DependentStrategy strategy = DependentStrategy::Auto;
  std::uint64_t seed = 0;
  std::size_t max_n_exact = kExactRankWidthGuard;
  std::size_t max_n_code = 20;
  std::size_t oracle_guard = kOracleGuard;
  OutputFormat format = OutputFormat::Text;
  InputFormat input_format = InputFormat::Auto;
  bool timing = false;

  // Command-specific knobs.
  std::string trace_out;
  std::string circuit_out;
  std::string word_out;
  std::string word_class = "circle";
  std::string measure = "zero";
  std::size_t oracle_n = 0;
  std::size_t random_n = 0;
  bool ancilla_check = false;
};

/// Ordered key/value output rendered as "key: value" or "key=value".
class Report {
 public:
  explicit Report(OutputFormat format) : format_(format) {}

  void add(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
  /// Adds every "key=value" line of a stats block.
  void add_block(const std::string& block);
  std::string str() const;

 private:
  OutputFormat format_;
  std::vector<std::pair<std::string, std::string>> rows_;
};

/// Reads a file, or standard input for "-". Throws InputError if the file
/// cannot be opened.
std::string read_input(const std::string& path);
/// Throws ecsynth::Error if the file cannot be written.
void write_output(const std::string& path, const std::string& text);

int cmd_synth(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
int cmd_oracle(const RunConfig& cfg);
int cmd_rankwidth(const RunConfig& cfg);
int cmd_words(const RunConfig& cfg);
int cmd_clifford(const RunConfig& cfg);
int cmd_code(const RunConfig& cfg);
int cmd_bench(const RunConfig& cfg);

}  // namespace ecsynth::cli
