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
#include <random>
#include <string>
#include <vector>

#include "framesim/bits.hpp"
#include "framesim/circuit.hpp"

namespace framesim {

/// Hard limit on dense state size.
inline constexpr std::size_t kDenseMaxQubits = 24;

/**
 * Plain state vector of 2^n amplitudes; basis index bit j is qubit j.
 */
class DenseState {
 public:
  using Amplitude = std::complex<double>;

  explicit DenseState(std::size_t n);
  static DenseState basis(const BasisState& bits);

  std::size_t num_qubits() const { return n_; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  std::vector<Amplitude>& amplitudes() { return amps_; }

  /// Unitary gates only; MEASURE is rejected.
  void apply(const Gate& g);
  void apply(const Circuit& c);

  double probability_one(std::size_t q) const;
  /// Projects onto outcome x of qubit q and renormalizes.
  void project(std::size_t q, bool x);
  /// Samples qubit q with one uniform deviate compared against p(0).
  bool measure(std::size_t q, std::mt19937_64& rng);

  double norm2() const;
  std::string dump() const;

 private:
  void check(std::size_t q) const;
  template <class Fn>
  void for_pairs(std::size_t q, Fn&& fn);

  std::size_t n_;
  std::vector<Amplitude> amps_;
};

/// True iff some unit c has |a_i - c b_i| <= tol for every i, with c taken
/// from the largest-magnitude entry of b.
bool equal_up_to_global_phase(const std::vector<std::complex<double>>& a,
                              const std::vector<std::complex<double>>& b,
                              double tol);

}  // namespace framesim
