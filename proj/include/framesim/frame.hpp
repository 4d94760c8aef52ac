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

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "framesim/bits.hpp"
#include "framesim/pauli.hpp"
#include "framesim/tableau.hpp"

namespace framesim {

using Amplitude = std::complex<double>;

/// Entries whose amplitude modulus falls below this are dropped.
inline constexpr double kPruneTolerance = 1e-12;

/**
 * A stabilizer matrix together with a list of (phase vector, amplitude)
 * entries. Entry j stands for a_j times the canonical state stabilized by
 * the matrix rows with signs sigma_j, so the frame represents
 * sum_j a_j |psi_j> over an orthonormal stabilizer basis.
 *
 * Phase vectors live in one flat word array. The matrix's own sign column
 * is not part of the represented state.
 */
class StabilizerFrame {
 public:
  StabilizerFrame() = default;
  explicit StabilizerFrame(StabilizerMatrix matrix);

  /// Single-entry frame for a computational basis state.
  static StabilizerFrame basis(const BasisState& bits);

  std::size_t num_qubits() const { return matrix_.num_qubits(); }
  const StabilizerMatrix& matrix() const { return matrix_; }
  std::size_t size() const { return amps_.size(); }
  bool empty() const { return amps_.empty(); }
  std::size_t words() const { return w_; }

  std::span<const Word> phase(std::size_t j) const {
    return {phases_.data() + j * w_, w_};
  }
  std::span<Word> phase(std::size_t j) { return {phases_.data() + j * w_, w_}; }
  PhaseVector phase_vector(std::size_t j) const;
  Amplitude amplitude(std::size_t j) const { return amps_[j]; }
  void set_amplitude(std::size_t j, Amplitude a) { amps_[j] = a; }

  void add_entry(std::span<const Word> phase, Amplitude a);
  void add_entry(const PhaseVector& phase, Amplitude a) {
    add_entry(phase.words(), a);
  }
  void clear_entries();
  void reserve(std::size_t k);

  /// Applies a Clifford gate, keeping every amplitude consistent with the
  /// canonical phase convention of the conjugated matrix.
  void rotate(const CliffordOp& gate);
  void rotate(std::span<const CliffordOp> gates);

  /// Splits every entry on qubit q. Returns the number of entries produced
  /// before duplicate phase vectors were combined.
  std::size_t cofactor(std::size_t q);

  void apply_toffoli(std::size_t c1, std::size_t c2, std::size_t t);
  void apply_controlled_phase(std::size_t c, std::size_t t, double alpha);
  void apply_t(std::size_t t, bool dagger);

  /// Sum over entries of |a|^2 p_j(1) for qubit q.
  double probability_one(std::size_t q) const;
  /// Cofactors on q and keeps only entries consistent with outcome x.
  void restrict_outcome(std::size_t q, bool x);

  /// Reduced echelon form of the matrix, replayed on every entry.
  void canonicalize();
  /// Sorts entries by phase vector, sums duplicates and prunes zeros.
  void normalize_entries();
  void scale(Amplitude factor);
  double norm2() const;

  /// Amplitude <b|Psi> of the represented state.
  Amplitude amplitude_of(const BasisState& b) const;
  /// Adds the represented state into a dense vector indexed with qubit j as
  /// bit j.
  void accumulate_dense(std::vector<Amplitude>& out) const;
  std::vector<Amplitude> to_dense() const;

  std::string dump() const;

 private:
  void check_qubit(std::size_t q) const;
  void sort_and_combine();

  StabilizerMatrix matrix_;
  std::size_t w_ = 0;
  std::vector<Word> phases_;
  std::vector<Amplitude> amps_;
};

/// Calls fn(b) for every basis state in the support of signs under m.
template <class Fn>
void for_each_support_state(const StabilizerMatrix& m,
                            std::span<const Word> signs, Fn&& fn) {
  BasisState b(m.num_qubits());
  m.anchor(signs, b.words());
  const std::size_t xr = m.x_rank();
  const std::size_t total = std::size_t{1} << xr;
  fn(static_cast<const BasisState&>(b));
  for (std::size_t g = 1; g < total; ++g) {
    const std::size_t r = static_cast<std::size_t>(std::countr_zero(g));
    xor_into(b.words(), m.row_x(r));
    fn(static_cast<const BasisState&>(b));
  }
}

}  // namespace framesim
