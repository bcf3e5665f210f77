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

#include "ecsynth/tableau/circuit.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

#include "ecsynth/error.hpp"

namespace ecsynth {

namespace {

struct GateName {
  GateKind kind;
  const char* name;
  int arity;
};

constexpr std::array<GateName, 11> kNames{{
    {GateKind::H, "H", 1},
    {GateKind::S, "S", 1},
    {GateKind::Sdg, "SDG", 1},
    {GateKind::X, "X", 1},
    {GateKind::Y, "Y", 1},
    {GateKind::Z, "Z", 1},
    {GateKind::CZ, "CZ", 2},
    {GateKind::SWAP, "SWAP", 2},
    {GateKind::MeasZ, "MEASZ", 1},
    {GateKind::ZIf, "ZIF", 2},
    {GateKind::Clifford2, "C2", 2},
}};

const GateName& info(GateKind k) {
  for (const auto& n : kNames) {
    if (n.kind == k) return n;
  }
  throw Error("unknown gate kind");
}

std::string matrix_rows(std::uint16_t m) {
  std::string out;
  for (int r = 0; r < 4; ++r) {
    out += ' ';
    for (int c = 0; c < 4; ++c) out += ((m >> (4 * r + c)) & 1) ? '1' : '0';
  }
  return out;
}

}  // namespace

bool Gate::two_qubit() const {
  return kind == GateKind::CZ || kind == GateKind::SWAP || kind == GateKind::Clifford2;
}

bool Gate::unitary() const { return kind != GateKind::MeasZ && kind != GateKind::ZIf; }

std::string to_string(const Gate& g) {
  const auto& n = info(g.kind);
  std::string out = std::string(n.name) + " " + std::to_string(g.a);
  if (n.arity == 2) out += " " + std::to_string(g.b);
  if (g.kind == GateKind::Clifford2) out += matrix_rows(g.matrix);
  return out;
}

void Circuit::add(const Gate& g) {
  if (g.a >= qubits || (info(g.kind).arity == 2 && g.b >= qubits)) {
    throw PreconditionError("gate '" + to_string(g) + "' is out of range for " +
                            std::to_string(qubits) + " qubits");
  }
  if (info(g.kind).arity == 2 && g.a == g.b) {
    throw PreconditionError("gate '" + to_string(g) + "' repeats a qubit");
  }
  gates.push_back(g);
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(gates.begin(), gates.end(), [&](const Gate& g) { return g.kind == kind; }));
}

std::size_t Circuit::two_qubit_count() const {
  return static_cast<std::size_t>(
      std::count_if(gates.begin(), gates.end(), [](const Gate& g) { return g.two_qubit(); }));
}

void validate(const Circuit& c) {
  Circuit copy{c.qubits, {}};
  for (const Gate& g : c.gates) copy.add(g);
}

std::string serialize_circuit(const Circuit& c) {
  std::string out = "CIRCUIT n=" + std::to_string(c.qubits) + "\n";
  for (const Gate& g : c.gates) out += to_string(g) + "\n";
  return out;
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  Circuit c;
  auto number = [&](const std::string& tok, std::size_t col) {
    try {
      std::size_t used = 0;
      const auto v = std::stoul(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("trailing");
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw ParseError("expected a qubit index, got '" + tok + "'", line_no, col);
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok.size() != 2 || tok[0] != "CIRCUIT" || tok[1].rfind("n=", 0) != 0) {
        throw ParseError("expected header 'CIRCUIT n=<count>'", line_no, 1);
      }
      c.qubits = number(tok[1].substr(2), 9);
      have_header = true;
      continue;
    }
    const auto it = std::find_if(kNames.begin(), kNames.end(),
                                 [&](const GateName& n) { return tok[0] == n.name; });
    if (it == kNames.end()) throw ParseError("unknown gate '" + tok[0] + "'", line_no, 1);
    const std::size_t expected =
        1 + static_cast<std::size_t>(it->arity) + (it->kind == GateKind::Clifford2 ? 4 : 0);
    if (tok.size() != expected) {
      throw ParseError(tok[0] + " expects " + std::to_string(expected - 1) + " arguments",
                       line_no, 1);
    }
    Gate g{it->kind, number(tok[1], 2)};
    if (it->arity == 2) g.b = number(tok[2], 3);
    if (it->kind == GateKind::Clifford2) {
      for (int r = 0; r < 4; ++r) {
        const std::string& row = tok[3 + static_cast<std::size_t>(r)];
        if (row.size() != 4 || row.find_first_not_of("01") != std::string::npos) {
          throw ParseError("matrix row must be four bits, got '" + row + "'", line_no, 4);
        }
        for (int col = 0; col < 4; ++col) {
          if (row[static_cast<std::size_t>(col)] == '1') {
            g.matrix = static_cast<std::uint16_t>(g.matrix | (1u << (4 * r + col)));
          }
        }
      }
    }
    try {
      c.add(g);
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), line_no, 1);
    }
  }
  if (!have_header) throw ParseError("missing 'CIRCUIT n=<count>' header", line_no, 1);
  return c;
}

}  // namespace ecsynth
