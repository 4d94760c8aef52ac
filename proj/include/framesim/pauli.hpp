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
#include <span>
#include <string>
#include <vector>

#include "framesim/bits.hpp"

namespace framesim {

enum class Pauli : std::uint8_t { I = 0b00, Z = 0b01, X = 0b10, Y = 0b11 };

enum class CliffordKind : std::uint8_t { H, P, PDG, X, Y, Z, CNOT };

/// A Clifford or Pauli gate with its operands. `target` is unused for
/// single-qubit kinds.
struct CliffordOp {
  CliffordKind kind;
  std::size_t qubit;
  std::size_t target = 0;

  bool operator==(const CliffordOp&) const = default;
};

/// Gate sequence undoing `ops` (reverse order, P and P-dagger swapped).
std::vector<CliffordOp> inverse(std::span<const CliffordOp> ops);

std::string to_string(const CliffordOp& op);

/**
 * Element i^k * P_0 (x) ... (x) P_{n-1} of the n-qubit Pauli group.
 *
 * Literals are kept in two bit planes: literal j is (x_j, z_j) with
 * I = 00, Z = 01, X = 10, Y = 11, where Y denotes the Hermitian Pauli
 * matrix. The phase exponent k is always reduced modulo 4.
 */
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n);
  PauliOperator(std::span<const Pauli> literals, unsigned phase_exp = 0);

  /// Parses e.g. "XZI", "-iIYXI", "+Z".
  static PauliOperator from_string(const std::string& text);

  std::size_t num_qubits() const { return n_; }
  unsigned phase_exp() const { return phase_; }
  void set_phase_exp(unsigned k) { phase_ = k & 3U; }

  Pauli literal(std::size_t j) const;
  void set_literal(std::size_t j, Pauli p);

  std::span<const Word> x() const { return x_; }
  std::span<const Word> z() const { return z_; }
  std::span<Word> x() { return x_; }
  std::span<Word> z() { return z_; }

  bool is_identity_literal() const;

  /// Rendering with an optional sign prefix from {+, -, +i, -i}; phase 0
  /// renders without prefix.
  std::string to_string() const;

  bool operator==(const PauliOperator&) const = default;

 private:
  std::size_t n_ = 0;
  unsigned phase_ = 0;
  std::vector<Word> x_;
  std::vector<Word> z_;
};

/// Exponent (mod 4) of the scalar i^k picked up by the literal product of
/// two literal strings given as bit planes, ignoring their own phases.
unsigned product_phase(std::span<const Word> x1, std::span<const Word> z1,
                       std::span<const Word> x2, std::span<const Word> z2);

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);

bool commutes(const PauliOperator& p, const PauliOperator& q);

/// U P U^dagger for a single Clifford or Pauli gate U.
PauliOperator conjugate_single(PauliOperator p, const CliffordOp& gate);

/// In-place conjugation of one literal string (given by its planes) by a
/// Clifford gate. Returns true when the sign of the operator flips.
bool conjugate_planes(std::span<Word> x, std::span<Word> z,
                      const CliffordOp& gate);

}  // namespace framesim
