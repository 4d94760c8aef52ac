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

#include "framesim/report.hpp"

#include <chrono>
#include <cmath>
#include <json.hpp>

#include "framesim/dense.hpp"
#include "framesim/errors.hpp"

namespace framesim {

namespace {

using nlohmann::ordered_json;

ordered_json number(double v) {
  if (std::floor(v) == v && std::fabs(v) < 9.0e15) {
    return static_cast<std::int64_t>(v);
  }
  return v;
}

std::string bit_label(std::size_t index, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t j = 0; j < n; ++j) {
    if ((index >> j) & 1U) s[j] = '1';
  }
  return s;
}

ordered_json record_json(const RunRecord& r) {
  ordered_json j;
  j["name"] = r.name;
  for (const auto& [key, value] : r.params) j[key] = number(value);
  j["seed"] = r.seed;
  j["mode"] = r.single_frame ? "single-frame" : "multiframe";
  j["num_qubits"] = r.stats.num_qubits;
  ordered_json counts = ordered_json::object();
  for (const auto& [kind, count] : r.stats.gate_counts) counts[kind] = count;
  j["gate_counts"] = counts;
  j["max_frames"] = r.stats.max_frames;
  j["max_states"] = r.stats.max_states;
  j["orthogonalizations"] = r.stats.orthogonalizations;
  j["outcomes"] = r.stats.outcomes;
  if (r.verified) j["verified"] = *r.verified;
  if (!r.amplitudes.empty()) {
    ordered_json amps = ordered_json::array();
    for (std::size_t i = 0; i < r.amplitudes.size(); ++i) {
      const auto a = r.amplitudes[i];
      if (std::abs(a) < 1e-12) continue;
      amps.push_back({{"basis", bit_label(i, r.stats.num_qubits)},
                      {"re", a.real()},
                      {"im", a.imag()}});
    }
    j["amplitudes"] = amps;
  }
  if (r.runtime_ms) j["runtime_ms"] = *r.runtime_ms;
  return j;
}

}  // namespace

RunRecord execute(const Circuit& circuit, const std::string& name,
                  const RunOptions& options, std::mt19937_64& rng) {
  if ((options.verify || options.amplitudes) &&
      circuit.num_qubits > kVerifyMaxQubits) {
    throw CapacityExceeded("dense cross-check is limited to " +
                           std::to_string(kVerifyMaxQubits) + " qubits");
  }
  RunRecord r;
  r.name = name;
  r.seed = options.seed;
  r.single_frame = options.single_frame;

  SimOptions sim;
  sim.single_frame = options.single_frame;
  const auto start = std::chrono::steady_clock::now();
  const Multiframe mf = simulate(circuit, rng, sim);
  const auto stop = std::chrono::steady_clock::now();

  r.stats = mf.stats();
  if (options.timing) {
    r.runtime_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
  }
  if (options.verify) r.verified = replay_matches(circuit, mf);
  if (options.amplitudes) r.amplitudes = mf.to_dense();
  return r;
}

bool replay_matches(const Circuit& circuit, const Multiframe& mf,
                    double tol) {
  DenseState d(circuit.num_qubits);
  std::size_t next = 0;
  const std::vector<int>& outcomes = mf.stats().outcomes;
  for (const Gate& g : circuit.gates) {
    if (g.kind != GateKind::MEASURE) {
      d.apply(g);
      continue;
    }
    if (next >= outcomes.size()) return false;
    const bool x = outcomes[next++] != 0;
    const double p = d.probability_one(g.qubits[0]);
    if ((x ? p : 1.0 - p) < tol) return false;
    d.project(g.qubits[0], x);
  }
  return next == outcomes.size() &&
         equal_up_to_global_phase(mf.to_dense(), d.amplitudes(), tol);
}

std::string to_json(const RunRecord& record) {
  return record_json(record).dump(2) + "\n";
}

std::string to_json(const std::string& family,
                    const std::vector<RunRecord>& records) {
  ordered_json j;
  j["family"] = family;
  ordered_json runs = ordered_json::array();
  for (const RunRecord& r : records) runs.push_back(record_json(r));
  j["runs"] = runs;
  return j.dump(2) + "\n";
}

}  // namespace framesim
