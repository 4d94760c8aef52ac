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
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "framesim/circuit.hpp"
#include "framesim/multiframe.hpp"

namespace framesim {

/// Largest circuit the dense cross-check and amplitude dump accept.
inline constexpr std::size_t kVerifyMaxQubits = 20;

struct RunOptions {
  std::uint64_t seed = 0;
  bool single_frame = false;
  bool verify = false;
  bool amplitudes = false;
  bool timing = false;
};

/// Outcome of one simulated circuit, as written to the JSON report.
struct RunRecord {
  std::string name;
  std::uint64_t seed = 0;
  bool single_frame = false;
  SimStats stats;
  std::optional<bool> verified;
  std::vector<std::complex<double>> amplitudes;
  std::optional<double> runtime_ms;
  /// Generator parameters; integral values are written as integers.
  std::map<std::string, double> params;
};

/// Simulates `circuit` drawing measurement coins from rng. Throws
/// CapacityExceeded when verify or amplitudes are requested above
/// kVerifyMaxQubits.
RunRecord execute(const Circuit& circuit, const std::string& name,
                  const RunOptions& options, std::mt19937_64& rng);

/// Replays the circuit densely, projecting measured qubits onto the
/// outcomes recorded in mf, and compares up to global phase.
bool replay_matches(const Circuit& circuit, const Multiframe& mf,
                    double tol = 1e-9);

std::string to_json(const RunRecord& record);
std::string to_json(const std::string& family,
                    const std::vector<RunRecord>& records);

}  // namespace framesim
