// Copyright 2026 The framesim Authors
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

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "framesim/pauli.hpp"

namespace framesim {

enum class GateKind : std::uint8_t {
  H, P, PDG, X, Y, Z, CNOT, TOF, CRZ, T, TDG, MEASURE
};

std::string_view gate_name(GateKind kind);
std::size_t gate_arity(GateKind kind);

struct Gate {
  GateKind kind;
  std::array<std::size_t, 3> qubits{};
  /// Rotation angle in radians; CRZ only.
  double angle = 0.0;

  std::size_t arity() const { return gate_arity(kind); }
  bool is_clifford() const;
  /// Valid only when is_clifford().
  CliffordOp clifford() const;

  bool operator==(const Gate&) const = default;
};

Gate make_gate(GateKind kind, std::size_t q0, std::size_t q1 = 0,
               std::size_t q2 = 0, double angle = 0.0);

struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<Gate> gates;

  void add(const Gate& g) { gates.push_back(g); }
  /// Throws std::invalid_argument on arity/range/distinctness violations.
  void validate() const;

  bool operator==(const Circuit&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  enum class Code { Header, UnknownGate, Arity, QubitRange, Angle, Token };

  ParseError(Code code, std::size_t line, std::size_t column,
             const std::string& message);

  Code code() const { return code_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Code code_;
  std::size_t line_;
  std::size_t column_;
};

Circuit parse_circuit(std::string_view text);
std::string write_circuit(const Circuit& circuit);

/// Angle text: "pi/<k>", "-pi/<k>", "pi", "-pi" or a decimal literal.
double parse_angle(std::string_view text);
std::string format_angle(double angle);

/// ceil(beta * ceil(n log2 n)) random H/P/CNOT gates, then a measurement of
/// every qubit in order.
Circuit gen_random_stabilizer(std::size_t n, double beta, std::mt19937_64& rng);
Circuit gen_random_stabilizer(std::size_t n, double beta, std::uint64_t seed);
std::size_t random_stabilizer_gate_count(std::size_t n, double beta);

/// Qubit positions of the ripple-carry adder: a_i and b_i interleaved,
/// followed by the ancilla and the carry-out.
struct CuccaroLayout {
  std::size_t bits;
  std::size_t a(std::size_t i) const { return 2 * i; }
  std::size_t b(std::size_t i) const { return 2 * i + 1; }
  std::size_t ancilla() const { return 2 * bits; }
  std::size_t carry() const { return 2 * bits + 1; }
  std::size_t num_qubits() const { return 2 * bits + 2; }
};

Circuit gen_cuccaro(std::size_t n);

/// Hadamard plus a descending ladder of CRZ(pi/2^k) per qubit, without the
/// final qubit reversal.
Circuit gen_qft(std::size_t n);

/// Seven-T network over {H, T, TDG, CNOT} equal to TOF(c1, c2, t).
std::vector<Gate> toffoli_decomposed(std::size_t c1, std::size_t c2,
                                     std::size_t t);
Circuit substitute_toffoli(const Circuit& circuit);

}  // namespace framesim
