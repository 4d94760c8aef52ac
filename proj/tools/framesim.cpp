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

// framesim command-line driver: run circuit files or benchmark families and
// print a JSON statistics report.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "framesim/circuit.hpp"
#include "framesim/errors.hpp"
#include "framesim/parallel.hpp"
#include "framesim/report.hpp"

namespace {

using namespace framesim;

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kFileNotFound = 2,
  kParse = 3,
  kCapacity = 4,
  kVerifyMismatch = 5,
};

constexpr const char* kExitHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  1  usage error or invalid parameters\n"
    "  2  input file not found\n"
    "  3  circuit parse error\n"
    "  4  capacity exceeded\n"
    "  5  oracle cross-check mismatch\n"
    "The FRAMESIM_WORKERS environment variable sets the default worker count.";

struct Common {
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  bool verify = false;
  bool amplitudes = false;
  bool single_frame = false;
  bool timing = false;
  std::string json_path;
};

std::size_t default_workers() {
  const char* env = std::getenv("FRAMESIM_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    const long v = std::stol(env);
    if (v >= 1) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  std::cerr << "warning: ignoring invalid FRAMESIM_WORKERS=" << env << '\n';
  return 1;
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "PRNG seed for generation and measurement")
      ->capture_default_str();
  cmd->add_option("--workers", c.workers, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--verify", c.verify, "cross-check against the dense oracle");
  cmd->add_flag("--amplitudes", c.amplitudes, "include final amplitudes");
  cmd->add_flag("--single-frame", c.single_frame, "disable coalescing");
  cmd->add_flag("--timing", c.timing, "include runtime_ms in the report");
  cmd->add_option("--json", c.json_path, "write the report here, not stdout");
}

RunOptions run_options(const Common& c) {
  RunOptions o;
  o.seed = c.seed;
  o.single_frame = c.single_frame;
  o.verify = c.verify;
  o.amplitudes = c.amplitudes;
  o.timing = c.timing;
  return o;
}

void summarize(const RunRecord& r) {
  std::cerr << r.name << ": qubits=" << r.stats.num_qubits
            << " max_frames=" << r.stats.max_frames
            << " max_states=" << r.stats.max_states;
  if (r.verified) std::cerr << " verified=" << (*r.verified ? "yes" : "NO");
  if (r.runtime_ms) std::cerr << " runtime_ms=" << *r.runtime_ms;
  std::cerr << '\n';
}

int emit(const std::string& json, const std::string& path) {
  if (path.empty()) {
    std::cout << json;
    return kOk;
  }
  std::ofstream out(path, std::ios::binary);
  out << json;
  if (!out) {
    std::cerr << "error: cannot write " << path << '\n';
    return kUsage;
  }
  return kOk;
}

int verdict(const std::vector<RunRecord>& records) {
  for (const RunRecord& r : records) {
    if (r.verified && !*r.verified) return kVerifyMismatch;
  }
  return kOk;
}

int run_file(const std::string& path, const Common& c) {
  if (!std::filesystem::is_regular_file(path)) {
    std::cerr << "error: file not found: " << path << '\n';
    return kFileNotFound;
  }
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  const Circuit circuit = parse_circuit(text.str());
  std::mt19937_64 rng(c.seed);
  const RunRecord r = execute(circuit, path, run_options(c), rng);
  summarize(r);
  const int code = emit(to_json(r), c.json_path);
  return code != kOk ? code : verdict({r});
}

struct BenchParams {
  std::string family;
  std::size_t n = 4;
  std::size_t n_max = 0;
  double beta = 0.6;
};

Circuit bench_circuit(const BenchParams& b, std::size_t n,
                      std::mt19937_64& rng) {
  if (b.family == "random") return gen_random_stabilizer(n, b.beta, rng);
  if (b.family == "cuccaro") {
    const CuccaroLayout layout{n};
    std::vector<std::size_t> inputs;
    for (std::size_t i = 0; i < n; ++i) {
      inputs.push_back(layout.a(i));
      inputs.push_back(layout.b(i));
    }
    return with_hadamards(gen_cuccaro(n), inputs);
  }
  Circuit c;
  c.num_qubits = n;
  for (std::size_t q = 0; q < n; ++q) c.add(make_gate(GateKind::X, q));
  for (const Gate& g : gen_qft(n).gates) c.add(g);
  return c;
}

int bench(const BenchParams& b, const Common& c) {
  const std::size_t last = b.n_max == 0 ? b.n : b.n_max;
  if (last < b.n) {
    std::cerr << "error: --n-max must not be below --n\n";
    return kUsage;
  }
  std::mt19937_64 rng(c.seed);
  std::vector<RunRecord> records;
  for (std::size_t n = b.n; n <= last; ++n) {
    const Circuit circuit = bench_circuit(b, n, rng);
    RunRecord r = execute(circuit, b.family, run_options(c), rng);
    r.params["n"] = static_cast<double>(n);
    if (b.family == "random") r.params["beta"] = b.beta;
    summarize(r);
    records.push_back(std::move(r));
  }
  const int code = emit(to_json(b.family, records), c.json_path);
  return code != kOk ? code : verdict(records);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabilizer-frame quantum circuit simulator"};
  app.footer(kExitHelp);
  app.require_subcommand(1);

  Common common;
  common.workers = default_workers();

  std::string path;
  CLI::App* run = app.add_subcommand("run", "simulate a circuit file");
  run->add_option("file", path, "circuit file")->required();
  add_common(run, common);

  BenchParams params;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "generate and simulate a benchmark family");
  bench_cmd->add_option("family", params.family, "random, cuccaro or qft")
      ->required()
      ->check(CLI::IsMember({"random", "cuccaro", "qft"}));
  bench_cmd->add_option("--n", params.n, "size (qubits, or adder bits)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--n-max", params.n_max, "sweep sizes n..n-max");
  bench_cmd->add_option("--beta", params.beta, "gate density for random")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(bench_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  set_worker_count(common.workers);
  try {
    if (*run) return run_file(path, common);
    return bench(params, common);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const CapacityExceeded& e) {
    std::cerr << "capacity exceeded: " << e.what() << '\n';
    return kCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
