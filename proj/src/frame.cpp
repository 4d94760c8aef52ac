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

#include "framesim/frame.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "framesim/errors.hpp"
#include "framesim/parallel.hpp"

namespace framesim {

namespace {

constexpr Amplitude kI{0.0, 1.0};

/// (U psi)(b) for one Clifford gate U, where psi is the canonical state of
/// `m` under `signs`.
Amplitude gate_value(const StabilizerMatrix& m, std::span<const Word> signs,
                     const BasisState& b, const CliffordOp& gate,
                     BasisState& tmp) {
  auto amp = [&](const BasisState& s) {
    return m.canonical_amplitude(signs, s.words());
  };
  const std::size_t q = gate.qubit;
  const bool bq = b[q];
  switch (gate.kind) {
    case CliffordKind::H: {
      tmp = b;
      tmp.set(q, false);
      const Amplitude a0 = amp(tmp);
      tmp.set(q, true);
      const Amplitude a1 = amp(tmp);
      return (bq ? a0 - a1 : a0 + a1) * M_SQRT1_2;
    }
    case CliffordKind::X:
      tmp = b;
      tmp.flip(q);
      return amp(tmp);
    case CliffordKind::Y:
      tmp = b;
      tmp.flip(q);
      return (bq ? kI : -kI) * amp(tmp);
    case CliffordKind::Z:
      return bq ? -amp(b) : amp(b);
    case CliffordKind::P:
      return bq ? kI * amp(b) : amp(b);
    case CliffordKind::PDG:
      return bq ? -kI * amp(b) : amp(b);
    case CliffordKind::CNOT:
      tmp = b;
      if (bq) tmp.flip(gate.target);
      return amp(tmp);
  }
  return {0.0, 0.0};
}

}  // namespace

StabilizerFrame::StabilizerFrame(StabilizerMatrix matrix)
    : matrix_(std::move(matrix)), w_(words_for(matrix_.num_qubits())) {}

StabilizerFrame StabilizerFrame::basis(const BasisState& bits) {
  StabilizerFrame f(StabilizerMatrix::init_basis(bits));
  f.add_entry(f.matrix_.signs(), 1.0);
  return f;
}

PhaseVector StabilizerFrame::phase_vector(std::size_t j) const {
  PhaseVector v(num_qubits());
  std::copy_n(phase(j).begin(), w_, v.words().begin());
  return v;
}

void StabilizerFrame::add_entry(std::span<const Word> phase, Amplitude a) {
  phases_.insert(phases_.end(), phase.begin(), phase.end());
  amps_.push_back(a);
}

void StabilizerFrame::clear_entries() {
  phases_.clear();
  amps_.clear();
}

void StabilizerFrame::reserve(std::size_t k) {
  phases_.reserve(k * w_);
  amps_.reserve(k);
}

void StabilizerFrame::check_qubit(std::size_t q) const {
  if (q >= num_qubits()) {
    throw QubitOutOfRange("qubit " + std::to_string(q) + " out of range for " +
                          std::to_string(num_qubits()) + " qubits");
  }
}

void StabilizerFrame::rotate(const CliffordOp& gate) {
  const StabilizerMatrix old = matrix_;
  const RowOpMemo memo = matrix_.conjugate(gate);
  const double inv_gamma = 1.0 / matrix_.anchor_modulus();
  const std::size_t n = num_qubits();
  parallel_for(size(), [&](std::size_t begin, std::size_t end) {
    BasisState b(n), tmp(n);
    std::vector<Word> before(w_);
    for (std::size_t j = begin; j < end; ++j) {
      std::copy_n(phase(j).begin(), w_, before.begin());
      memo.apply(phase(j));
      matrix_.anchor(phase(j), b.words());
      amps_[j] *= gate_value(old, before, b, gate, tmp) * inv_gamma;
    }
  });
}

void StabilizerFrame::rotate(std::span<const CliffordOp> gates) {
  for (const CliffordOp& g : gates) rotate(g);
}

std::size_t StabilizerFrame::cofactor(std::size_t q) {
  check_qubit(q);
  if (!matrix_.measure_kind(q).random) return size();
  const StabilizerMatrix old = matrix_;
  const RowOpMemo memo = matrix_.collapse(q, false);
  const double inv_gamma = 1.0 / matrix_.anchor_modulus();
  const std::size_t n = num_qubits();
  const std::size_t k = size();

  std::vector<Word> phases(2 * k * w_);
  std::vector<Amplitude> amps(2 * k);
  parallel_for(k, [&](std::size_t begin, std::size_t end) {
    BasisState b(n);
    for (std::size_t j = begin; j < end; ++j) {
      for (int x = 0; x < 2; ++x) {
        const std::size_t dst = 2 * j + static_cast<std::size_t>(x);
        std::span<Word> s(phases.data() + dst * w_, w_);
        std::copy_n(phase(j).begin(), w_, s.begin());
        memo.apply(s, x == 1);
        matrix_.anchor(s, b.words());
        amps[dst] = amps_[j] * old.canonical_amplitude(phase(j), b.words()) *
                    inv_gamma;
      }
    }
  });

  // Entries that differ only in the sign of the replaced row land on the
  // same pair of phase vectors.
  std::size_t reset_row = 0;
  for (const RowOp& op : memo.ops()) {
    if (op.kind == RowOp::Kind::Reset) reset_row = op.dst;
  }
  bool varies = false;
  for (std::size_t j = 1; j < k && !varies; ++j) {
    varies = test_bit(phase(j), reset_row) != test_bit(phase(0), reset_row);
  }
  phases_ = std::move(phases);
  amps_ = std::move(amps);
  if (varies) sort_and_combine();
  return 2 * k;
}

void StabilizerFrame::apply_toffoli(std::size_t c1, std::size_t c2,
                                    std::size_t t) {
  check_qubit(c1);
  check_qubit(c2);
  check_qubit(t);
  if (c1 == c2 || c1 == t || c2 == t) {
    throw std::invalid_argument("Toffoli qubits must be distinct");
  }
  cofactor(c1);
  cofactor(c2);
  const PhaseVector m1 = matrix_.outcome_mask(c1);
  const PhaseVector m2 = matrix_.outcome_mask(c2);
  const std::size_t n = num_qubits();
  PhaseVector flips(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (test_bit(matrix_.row_z(i), t)) flips.set(i, true);
  }
  const double inv_gamma = 1.0 / matrix_.anchor_modulus();
  parallel_for(size(), [&](std::size_t begin, std::size_t end) {
    BasisState b(n);
    std::vector<Word> before(w_);
    for (std::size_t j = begin; j < end; ++j) {
      if (!parity_of_and(phase(j), m1.words()) ||
          !parity_of_and(phase(j), m2.words())) {
        continue;
      }
      std::copy_n(phase(j).begin(), w_, before.begin());
      xor_into(phase(j), flips.words());
      matrix_.anchor(phase(j), b.words());
      b.flip(t);
      amps_[j] *= matrix_.canonical_amplitude(before, b.words()) * inv_gamma;
    }
  });
}

void StabilizerFrame::apply_controlled_phase(std::size_t c, std::size_t t,
                                             double alpha) {
  check_qubit(c);
  check_qubit(t);
  if (c == t) throw std::invalid_argument("controlled phase on one qubit");
  cofactor(c);
  cofactor(t);
  const PhaseVector mc = matrix_.outcome_mask(c);
  const PhaseVector mt = matrix_.outcome_mask(t);
  const Amplitude factor = std::polar(1.0, alpha);
  parallel_for(size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      if (parity_of_and(phase(j), mc.words()) &&
          parity_of_and(phase(j), mt.words())) {
        amps_[j] *= factor;
      }
    }
  });
}

void StabilizerFrame::apply_t(std::size_t t, bool dagger) {
  check_qubit(t);
  cofactor(t);
  const PhaseVector mt = matrix_.outcome_mask(t);
  const Amplitude factor = std::polar(1.0, dagger ? -M_PI / 4 : M_PI / 4);
  parallel_for(size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      if (parity_of_and(phase(j), mt.words())) amps_[j] *= factor;
    }
  });
}

double StabilizerFrame::probability_one(std::size_t q) const {
  check_qubit(q);
  if (matrix_.measure_kind(q).random) {
    if (size() == 1) return 0.5 * norm2();
    StabilizerFrame split = *this;
    split.cofactor(q);
    return split.probability_one(q);
  }
  const PhaseVector mask = matrix_.outcome_mask(q);
  double p = 0.0;
  for (std::size_t j = 0; j < size(); ++j) {
    if (parity_of_and(phase(j), mask.words())) p += std::norm(amps_[j]);
  }
  return p;
}

void StabilizerFrame::restrict_outcome(std::size_t q, bool x) {
  cofactor(q);
  const PhaseVector mask = matrix_.outcome_mask(q);
  std::size_t kept = 0;
  for (std::size_t j = 0; j < size(); ++j) {
    if (parity_of_and(phase(j), mask.words()) != x) continue;
    if (kept != j) {
      std::copy_n(phase(j).begin(), w_, phase(kept).begin());
      amps_[kept] = amps_[j];
    }
    ++kept;
  }
  amps_.resize(kept);
  phases_.resize(kept * w_);
}

void StabilizerFrame::canonicalize() {
  const RowOpMemo memo = matrix_.canonicalize();
  if (memo.empty()) return;
  parallel_for(size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) memo.apply(phase(j));
  });
}

void StabilizerFrame::normalize_entries() { sort_and_combine(); }

void StabilizerFrame::sort_and_combine() {
  const std::size_t k = size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto pa = phase(a), pb = phase(b);
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(),
                                        pb.end());
  });
  std::vector<Word> phases;
  std::vector<Amplitude> amps;
  phases.reserve(k * w_);
  amps.reserve(k);
  for (std::size_t i = 0; i < k;) {
    Amplitude sum = amps_[order[i]];
    std::size_t next = i + 1;
    while (next < k && std::equal(phase(order[i]).begin(),
                                  phase(order[i]).end(),
                                  phase(order[next]).begin())) {
      sum += amps_[order[next]];
      ++next;
    }
    if (std::abs(sum) >= kPruneTolerance) {
      const auto p = phase(order[i]);
      phases.insert(phases.end(), p.begin(), p.end());
      amps.push_back(sum);
    }
    i = next;
  }
  phases_ = std::move(phases);
  amps_ = std::move(amps);
}

void StabilizerFrame::scale(Amplitude factor) {
  for (Amplitude& a : amps_) a *= factor;
}

double StabilizerFrame::norm2() const {
  double s = 0.0;
  for (const Amplitude& a : amps_) s += std::norm(a);
  return s;
}

Amplitude StabilizerFrame::amplitude_of(const BasisState& b) const {
  Amplitude s{0.0, 0.0};
  for (std::size_t j = 0; j < size(); ++j) {
    s += amps_[j] * matrix_.canonical_amplitude(phase(j), b.words());
  }
  return s;
}

void StabilizerFrame::accumulate_dense(std::vector<Amplitude>& out) const {
  const std::size_t n = num_qubits();
  if (n > 24) throw CapacityExceeded("dense expansion limited to 24 qubits");
  out.resize(std::size_t{1} << n, Amplitude{0.0, 0.0});
  for (std::size_t j = 0; j < size(); ++j) {
    for_each_support_state(matrix_, phase(j), [&](const BasisState& b) {
      const std::size_t index = n == 0 ? 0 : b.words()[0];
      out[index] += amps_[j] * matrix_.canonical_amplitude(phase(j), b.words());
    });
  }
}

std::vector<Amplitude> StabilizerFrame::to_dense() const {
  std::vector<Amplitude> out;
  accumulate_dense(out);
  return out;
}

std::string StabilizerFrame::dump() const {
  std::ostringstream out;
  out << matrix_.to_string();
  for (std::size_t j = 0; j < size(); ++j) {
    out << phase_vector(j).to_string() << ' ' << amps_[j].real() << ','
        << amps_[j].imag() << '\n';
  }
  return out.str();
}

}  // namespace framesim
