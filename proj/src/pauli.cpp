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

#include "framesim/pauli.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "framesim/errors.hpp"

namespace framesim {

namespace {

void check_same_size(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw SizeMismatch(
        "Pauli operators act on " + std::to_string(p.num_qubits()) + " and " +
        std::to_string(q.num_qubits()) + " qubits");
  }
}

void check_qubit(std::size_t q, std::size_t n) {
  if (q >= n) {
    throw QubitOutOfRange(
        "qubit " + std::to_string(q) + " out of range for " +
        std::to_string(n) + " qubits");
  }
}

}  // namespace

BitVector BitVector::from_string(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bad bit character in '" + bits + "'");
    }
  }
  return v;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

std::vector<CliffordOp> inverse(std::span<const CliffordOp> ops) {
  std::vector<CliffordOp> out(ops.rbegin(), ops.rend());
  for (CliffordOp& op : out) {
    if (op.kind == CliffordKind::P) {
      op.kind = CliffordKind::PDG;
    } else if (op.kind == CliffordKind::PDG) {
      op.kind = CliffordKind::P;
    }
  }
  return out;
}

std::string to_string(const CliffordOp& op) {
  static const char* names[] = {"h", "p", "pdg", "x", "y", "z", "cnot"};
  std::string s = names[static_cast<int>(op.kind)];
  s += " " + std::to_string(op.qubit);
  if (op.kind == CliffordKind::CNOT) s += " " + std::to_string(op.target);
  return s;
}

PauliOperator::PauliOperator(std::size_t n)
    : n_(n), x_(words_for(n), 0), z_(words_for(n), 0) {}

PauliOperator::PauliOperator(std::span<const Pauli> literals,
                             unsigned phase_exp)
    : PauliOperator(literals.size()) {
  for (std::size_t j = 0; j < literals.size(); ++j) {
    set_literal(j, literals[j]);
  }
  set_phase_exp(phase_exp);
}

PauliOperator PauliOperator::from_string(const std::string& text) {
  std::size_t pos = 0;
  unsigned phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  std::vector<Pauli> lits;
  for (; pos < text.size(); ++pos) {
    switch (text[pos]) {
      case 'I': lits.push_back(Pauli::I); break;
      case 'X': lits.push_back(Pauli::X); break;
      case 'Y': lits.push_back(Pauli::Y); break;
      case 'Z': lits.push_back(Pauli::Z); break;
      default:
        throw std::invalid_argument("bad Pauli literal in '" + text + "'");
    }
  }
  return PauliOperator(lits, phase);
}

Pauli PauliOperator::literal(std::size_t j) const {
  check_qubit(j, n_);
  const unsigned bits = (test_bit(x_, j) ? 2U : 0U) | (test_bit(z_, j) ? 1U : 0U);
  return static_cast<Pauli>(bits);
}

void PauliOperator::set_literal(std::size_t j, Pauli p) {
  check_qubit(j, n_);
  const auto bits = static_cast<unsigned>(p);
  set_bit(x_, j, bits & 2U);
  set_bit(z_, j, bits & 1U);
}

bool PauliOperator::is_identity_literal() const {
  return all_zero(x_) && all_zero(z_);
}

std::string PauliOperator::to_string() const {
  static const char* prefix[] = {"", "+i", "-", "-i"};
  std::string s = prefix[phase_];
  for (std::size_t j = 0; j < n_; ++j) {
    s += "IZXY"[static_cast<int>(literal(j))];
  }
  return s;
}

unsigned product_phase(std::span<const Word> x1, std::span<const Word> z1,
                       std::span<const Word> x2, std::span<const Word> z2) {
  // Per-position contributions: XY, YZ, ZX give +1; XZ, YX, ZY give -1.
  int acc = 0;
  for (std::size_t k = 0; k < x1.size(); ++k) {
    const Word a = x1[k], b = z1[k], c = x2[k], d = z2[k];
    const Word pos = (a & ~b & c & d) | (a & b & ~c & d) | (~a & b & c & ~d);
    const Word neg = (a & ~b & ~c & d) | (a & b & c & ~d) | (~a & b & c & d);
    acc += std::popcount(pos) - std::popcount(neg);
  }
  return static_cast<unsigned>(acc) & 3U;
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  check_same_size(p, q);
  PauliOperator r = p;
  const unsigned k = product_phase(p.x(), p.z(), q.x(), q.z());
  xor_into(r.x(), q.x());
  xor_into(r.z(), q.z());
  r.set_phase_exp(p.phase_exp() + q.phase_exp() + k);
  return r;
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  check_same_size(p, q);
  Word acc = 0;
  for (std::size_t k = 0; k < p.x().size(); ++k) {
    acc ^= (p.x()[k] & q.z()[k]) ^ (p.z()[k] & q.x()[k]);
  }
  return (std::popcount(acc) & 1) == 0;
}

bool conjugate_planes(std::span<Word> x, std::span<Word> z,
                      const CliffordOp& gate) {
  const std::size_t q = gate.qubit;
  const bool xq = test_bit(x, q);
  const bool zq = test_bit(z, q);
  switch (gate.kind) {
    case CliffordKind::H:
      set_bit(x, q, zq);
      set_bit(z, q, xq);
      return xq && zq;
    case CliffordKind::P:
      set_bit(z, q, zq ^ xq);
      return xq && zq;
    case CliffordKind::PDG:
      set_bit(z, q, zq ^ xq);
      return xq && !zq;
    case CliffordKind::X:
      return zq;
    case CliffordKind::Y:
      return xq != zq;
    case CliffordKind::Z:
      return xq;
    case CliffordKind::CNOT: {
      const std::size_t t = gate.target;
      const bool xt = test_bit(x, t);
      const bool zt = test_bit(z, t);
      set_bit(x, t, xt ^ xq);
      set_bit(z, q, zq ^ zt);
      return xq && zt && (xt == zq);
    }
  }
  return false;
}

PauliOperator conjugate_single(PauliOperator p, const CliffordOp& gate) {
  check_qubit(gate.qubit, p.num_qubits());
  if (gate.kind == CliffordKind::CNOT) {
    check_qubit(gate.target, p.num_qubits());
    if (gate.target == gate.qubit) {
      throw std::invalid_argument("CNOT control equals target");
    }
  }
  if (conjugate_planes(p.x(), p.z(), gate)) {
    p.set_phase_exp(p.phase_exp() + 2);
  }
  return p;
}

}  // namespace framesim
