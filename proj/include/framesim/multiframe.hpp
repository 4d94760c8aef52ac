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

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "framesim/circuit.hpp"
#include "framesim/frame.hpp"

namespace framesim {

/// Relative tolerance for the i^d amplitude test of candidate pairs.
inline constexpr double kPairTolerance = 1e-9;

/// Splits a frame into frames whose candidate pairs are fused. The first
/// output frame (when present) holds the unpaired entries under the
/// original matrix.
std::vector<StabilizerFrame> coalesce(StabilizerFrame f);
/// Rotates to computational-basis form, coalesces, rotates back.
std::vector<StabilizerFrame> coalesce_general(StabilizerFrame f);

/// Literal rows shared by every matrix, after each is canonicalized.
std::vector<PauliOperator> intersection(const std::vector<StabilizerFrame>& frames);

/// True when every basis state of f is orthogonal to every basis state of
/// g. Uses the common-row sign shortcut first when `use_fast_path` is set.
bool frames_orthogonal(const StabilizerFrame& f, const StabilizerFrame& g,
                       bool use_fast_path = true);
/// Orthogonality of entry i of f and entry j of g by the common-row sign
/// test alone; false means "not certified".
bool fast_path_orthogonal(const StabilizerFrame& f, std::size_t i,
                          const StabilizerFrame& g, std::size_t j);

struct SimStats {
  std::size_t num_qubits = 0;
  std::map<std::string, std::size_t> gate_counts;
  std::size_t max_frames = 0;
  std::size_t max_states = 0;
  std::size_t orthogonalizations = 0;
  std::vector<int> outcomes;
};

/**
 * Superposition over a list of mutually orthogonal stabilizer frames.
 */
class Multiframe {
 public:
  explicit Multiframe(std::size_t n);
  static Multiframe basis(const BasisState& bits);

  std::size_t num_qubits() const { return n_; }
  const std::vector<StabilizerFrame>& frames() const { return frames_; }
  std::vector<StabilizerFrame>& frames() { return frames_; }
  std::size_t num_frames() const { return frames_.size(); }
  std::size_t total_states() const;

  /// When false, coalescing is skipped and the state stays in one frame.
  void set_coalescing(bool on) { coalescing_ = on; }
  bool coalescing() const { return coalescing_; }

  void apply_clifford(const CliffordOp& gate);
  void apply_nonclifford(const Gate& gate);
  /// Draws one uniform deviate from rng and collapses qubit q.
  bool measure(std::size_t q, std::mt19937_64& rng);
  /// Collapses qubit q given a uniform deviate u in [0, 1).
  bool measure_with(std::size_t q, double u);
  double probability_one(std::size_t q) const;
  void apply(const Gate& gate, std::mt19937_64& rng);

  void merge_frames();
  bool check_orthogonality() const;
  void orthogonalize();
  /// Coalesce and merge until neither changes anything.
  void coalesce_to_fixpoint();

  double norm2() const;
  std::vector<Amplitude> to_dense() const;

  SimStats& stats() { return stats_; }
  const SimStats& stats() const { return stats_; }

 private:
  void record_peak();
  std::size_t pick_pivot() const;
  /// Cofactors every frame on q and restores orthogonality, so that each
  /// basis state has a definite value of q.
  void split_on(std::size_t q);

  std::size_t n_;
  std::vector<StabilizerFrame> frames_;
  bool coalescing_ = true;
  SimStats stats_;
};

struct SimOptions {
  bool single_frame = false;
};

/// Runs the circuit from |0...0>; measurement coins come from rng.
Multiframe simulate(const Circuit& circuit, std::mt19937_64& rng,
                    const SimOptions& options = {});

/// Circuit prefixed by H on every qubit in `qubits`.
Circuit with_hadamards(const Circuit& circuit,
                       const std::vector<std::size_t>& qubits);

}  // namespace framesim
