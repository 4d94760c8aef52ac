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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "framesim/bits.hpp"
#include "framesim/pauli.hpp"

namespace framesim {

/// One elementary row operation recorded while a matrix is rewritten.
struct RowOp {
  enum class Kind : std::uint8_t { Mul, Reset };
  Kind kind;
  std::uint32_t dst;
  std::uint32_t src;
  /// For Mul: the product picked up an extra -1.
  bool flip;
};

/**
 * Replayable record of how the rows of a stabilizer matrix were rewritten.
 *
 * A frame keeps many sign vectors against one matrix. Every sign vector is
 * brought up to date by replaying the memo: first the per-row sign flips of a
 * Clifford conjugation, then the multiplications and (for a collapse) the
 * reset of one row to a forced outcome, and finally the row permutation.
 */
class RowOpMemo {
 public:
  RowOpMemo() = default;
  explicit RowOpMemo(std::size_t rows) : flips_(rows) {}

  void apply(std::span<Word> signs, bool forced = false) const;
  void apply(PhaseVector& signs, bool forced = false) const {
    apply(signs.words(), forced);
  }

  const std::vector<RowOp>& ops() const { return ops_; }
  const std::vector<std::uint32_t>& permutation() const { return perm_; }
  std::size_t multiplications() const;
  bool has_reset() const;
  bool empty() const;

 private:
  friend class StabilizerMatrix;

  PhaseVector flips_;
  bool any_flip_ = false;
  std::vector<RowOp> ops_;
  /// New row i is old row perm_[i]; empty means identity.
  std::vector<std::uint32_t> perm_;
};

struct MeasureKind {
  bool random;
  bool outcome;
};

/**
 * Generator matrix of an n-qubit stabilizer state.
 *
 * Rows are stored as packed X and Z bit planes with the signs kept apart in
 * a bit vector. In row-echelon form the leading columns, taken in the order
 * x_0 .. x_{n-1}, z_0 .. z_{n-1}, strictly increase down the matrix, so the
 * rows containing X/Y literals form the upper X-block and the Z/I-only rows
 * form the lower Z-block.
 */
class StabilizerMatrix {
 public:
  StabilizerMatrix() = default;
  explicit StabilizerMatrix(std::size_t n);

  static StabilizerMatrix init_basis(const BasisState& bits);
  static StabilizerMatrix init_basis(const std::string& bits) {
    return init_basis(BasisState::from_string(bits));
  }
  /// Builds a matrix from signed rows as given; no reordering is done.
  static StabilizerMatrix from_rows(const std::vector<std::string>& rows);

  std::size_t num_qubits() const { return n_; }
  std::size_t words_per_row() const { return w_; }

  PauliOperator row(std::size_t i) const;
  std::span<const Word> row_x(std::size_t i) const {
    return {x_.data() + i * w_, w_};
  }
  std::span<const Word> row_z(std::size_t i) const {
    return {z_.data() + i * w_, w_};
  }
  const PhaseVector& signs() const { return signs_; }
  void set_signs(const PhaseVector& signs) { signs_ = signs; }

  /// Number of rows in the X-block.
  std::size_t x_rank() const { return x_rank_; }
  /// Leading column of row i in the combined order; valid in echelon form.
  std::size_t lead(std::size_t i) const { return leads_[i]; }

  bool is_row_echelon() const;
  /// Checks commutation, independence and echelon structure.
  bool is_valid() const;

  RowOpMemo conjugate(const CliffordOp& gate);
  RowOpMemo to_row_echelon();
  /// Reduced echelon form: every leading column is clear in all other rows.
  RowOpMemo canonicalize();

  MeasureKind measure_kind(std::size_t q) const;
  /// Rows whose product is +Z_q when q is deterministic.
  PhaseVector outcome_mask(std::size_t q) const;
  RowOpMemo collapse(std::size_t q, bool forced_outcome);

  /// Anchor basis state for the given signs: Z-block back-substitution with
  /// every free choice set to 0.
  void anchor(std::span<const Word> signs, std::span<Word> out) const;
  BasisState anchor(const PhaseVector& signs) const;

  std::complex<double> canonical_amplitude(std::span<const Word> signs,
                                           std::span<const Word> b) const;
  std::complex<double> canonical_amplitude(const PhaseVector& signs,
                                           const BasisState& b) const {
    return canonical_amplitude(signs.words(), b.words());
  }
  std::complex<double> canonical_amplitude(const BasisState& b) const {
    return canonical_amplitude(signs_.words(), b.words());
  }
  /// 2^{-x_rank/2}, the modulus of every nonzero amplitude.
  double anchor_modulus() const { return anchor_modulus_; }

  std::vector<CliffordOp> basis_form_circuit() const;

  /// True when row i is a single +-Z_k literal; k is written to `qubit`.
  bool is_single_z(std::size_t i, std::size_t& qubit) const;

  bool same_literals(const StabilizerMatrix& other) const {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
  }
  std::size_t literal_hash() const;

  std::string to_string() const;

 private:
  std::span<Word> mx(std::size_t i) { return {x_.data() + i * w_, w_}; }
  std::span<Word> mz(std::size_t i) { return {z_.data() + i * w_, w_}; }

  std::size_t compute_lead(std::size_t i, std::size_t from = 0) const;
  void mul_rows(std::size_t dst, std::size_t src, RowOpMemo& memo);
  void repair(RowOpMemo& memo);
  void refresh_profile();

  std::size_t n_ = 0;
  std::size_t w_ = 0;
  std::vector<Word> x_;
  std::vector<Word> z_;
  PhaseVector signs_;
  std::vector<std::size_t> leads_;
  std::size_t x_rank_ = 0;
  double anchor_modulus_ = 1.0;
};

}  // namespace framesim
