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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "framesim/dense.hpp"
#include "framesim/multiframe.hpp"
#include "oracle_util.hpp"

using namespace framesim;
using namespace framesim::testing;

namespace {

PhaseVector bits(const char* s) { return PhaseVector::from_string(s); }

Vec sum_dense(const std::vector<StabilizerFrame>& frames, std::size_t n) {
  Vec v(std::size_t{1} << n);
  for (const StabilizerFrame& f : frames) f.accumulate_dense(v);
  return v;
}

bool same(const Vec& a, const Vec& b, double tol = 1e-10) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k]) > tol) return false;
  }
  return true;
}

std::size_t entries(const std::vector<StabilizerFrame>& frames) {
  std::size_t k = 0;
  for (const StabilizerFrame& f : frames) k += f.size();
  return k;
}

// Every entry of every frame as its own dense vector.
std::vector<std::pair<std::size_t, Vec>> entry_states(const Multiframe& mf) {
  std::vector<std::pair<std::size_t, Vec>> out;
  for (std::size_t i = 0; i < mf.frames().size(); ++i) {
    const StabilizerFrame& f = mf.frames()[i];
    for (std::size_t j = 0; j < f.size(); ++j) {
      StabilizerFrame one = f;
      one.clear_entries();
      one.add_entry(f.phase(j), 1.0);
      out.emplace_back(i, one.to_dense());
    }
  }
  return out;
}

bool cross_frame_orthogonal(const Multiframe& mf) {
  const auto states = entry_states(mf);
  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = a + 1; b < states.size(); ++b) {
      if (states[a].first == states[b].first) continue;
      if (inner_abs(states[a].second, states[b].second) > 1e-9) return false;
    }
  }
  return true;
}

// Frame over a random stabilizer matrix with Z rows produced by cofactoring
// and amplitudes drawn from powers of i, so that coalescing has work to do.
StabilizerFrame pairable_frame(std::size_t n, std::mt19937_64& rng) {
  StabilizerFrame f = StabilizerFrame::basis(BasisState(n));
  for (int g = 0; g < 25; ++g) f.rotate(random_clifford(n, rng, false));
  for (int c = 0; c < 3; ++c) f.cofactor(rng() % n);
  static const Amplitude powers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::size_t j = 0; j < f.size(); ++j) {
    f.set_amplitude(j, powers[rng() % 4] * (rng() % 3 == 0 ? 0.5 : 1.0));
  }
  return f;
}

Gate random_gate(std::size_t n, std::mt19937_64& rng) {
  const std::size_t a = rng() % n;
  const std::size_t b = (a + 1 + rng() % (n - 1)) % n;
  std::size_t c = rng() % n;
  while (c == a || c == b) c = rng() % n;
  static const double angles[] = {M_PI / 2, M_PI / 4, M_PI / 8};
  switch (rng() % 11) {
    case 0: return make_gate(GateKind::H, a);
    case 1: return make_gate(GateKind::P, a);
    case 2: return make_gate(GateKind::PDG, a);
    case 3: return make_gate(GateKind::X, a);
    case 4: return make_gate(GateKind::Y, a);
    case 5: return make_gate(GateKind::Z, a);
    case 6: return make_gate(GateKind::CNOT, a, b);
    case 7: return make_gate(GateKind::TOF, a, b, c);
    case 8: return make_gate(GateKind::CRZ, a, b, 0, angles[rng() % 3]);
    case 9: return make_gate(GateKind::T, a);
    default: return make_gate(GateKind::TDG, a);
  }
}

}  // namespace

TEST_CASE("worked coalescing example") {
  StabilizerFrame f(StabilizerMatrix::from_rows({"+XII", "+IZI", "+IIZ"}));
  f.add_entry(bits("000"), 0.5);
  f.add_entry(bits("010"), 0.5);
  f.add_entry(bits("100"), 0.5);
  f.add_entry(bits("111"), 0.5);
  const Vec before = f.to_dense();

  const std::vector<StabilizerFrame> out = coalesce(f);
  REQUIRE(out.size() == 2);
  CHECK(out[0].size() == 1);
  CHECK(out[1].size() == 1);
  CHECK(same(sum_dense(out, 3), before));

  std::vector<std::string> shapes;
  for (const StabilizerFrame& g : out) {
    StabilizerMatrix m = g.matrix();
    m.canonicalize();
    PhaseVector plus(3);
    m.set_signs(plus);
    shapes.push_back(m.to_string());
  }
  std::sort(shapes.begin(), shapes.end());
  // H on the second qubit, and H then CNOT from the second to the third.
  CHECK(shapes[0] == "+XII\n+IXI\n+IIZ\n");
  CHECK(shapes[1] == "+XII\n+IXX\n+IZZ\n");
}

TEST_CASE("two basis entries fuse into a plus state") {
  StabilizerFrame f = StabilizerFrame::basis(BasisState(1));
  f.clear_entries();
  f.add_entry(bits("0"), 1 / std::sqrt(2.0));
  f.add_entry(bits("1"), 1 / std::sqrt(2.0));
  const std::vector<StabilizerFrame> out = coalesce(f);
  REQUIRE(out.size() == 1);
  REQUIRE(out[0].size() == 1);
  CHECK(out[0].matrix().row(0).to_string() == "X");
  CHECK(same(out[0].to_dense(), f.to_dense()));
}

TEST_CASE("single entries and unrelated amplitudes are left alone") {
  const StabilizerFrame one = StabilizerFrame::basis(BasisState::from_string("01"));
  const auto out = coalesce(one);
  REQUIRE(out.size() == 1);
  CHECK(out[0].size() == 1);

  StabilizerFrame f = StabilizerFrame::basis(BasisState(1));
  f.clear_entries();
  f.add_entry(bits("0"), 0.6);
  f.add_entry(bits("1"), 0.8);
  const auto kept = coalesce(f);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].size() == 2);
}

TEST_CASE("coalescing preserves the state and never adds entries") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 6;
    const StabilizerFrame f = pairable_frame(n, rng);
    const Vec before = f.to_dense();
    const auto plain = coalesce(f);
    CHECK(same(sum_dense(plain, n), before));
    CHECK(entries(plain) <= f.size());
    const auto general = coalesce_general(f);
    CHECK(same(sum_dense(general, n), before));
    CHECK(entries(general) <= f.size());
  }
}

TEST_CASE("general coalescing finds pairs in a rotated basis") {
  StabilizerFrame f(StabilizerMatrix::from_rows({"+ZI", "+IZ"}));
  f.add_entry(bits("00"), 0.5);
  f.add_entry(bits("01"), 0.5);
  f.add_entry(bits("10"), 0.5);
  f.add_entry(bits("11"), -0.5);
  f.rotate(CliffordOp{CliffordKind::H, 0, 0});
  f.rotate(CliffordOp{CliffordKind::H, 1, 0});
  const Vec before = f.to_dense();
  const auto out = coalesce_general(f);
  CHECK(entries(out) < f.size());
  CHECK(same(sum_dense(out, 2), before));
}

TEST_CASE("merging frames with equal matrices") {
  Multiframe mf(2);
  mf.frames().clear();
  StabilizerFrame a(StabilizerMatrix::from_rows({"+XI", "+IZ"}));
  a.add_entry(bits("00"), 0.5);
  StabilizerFrame b = a;
  b.clear_entries();
  b.add_entry(bits("01"), 0.5);
  b.add_entry(bits("00"), -0.5);
  StabilizerFrame c(StabilizerMatrix::from_rows({"+ZI", "+IX"}));
  c.add_entry(bits("00"), 0.5);
  mf.frames() = {a, b, c};
  mf.merge_frames();
  REQUIRE(mf.num_frames() == 2);
  std::size_t total = 0;
  for (const StabilizerFrame& f : mf.frames()) total += f.size();
  CHECK(total == 2);
}

TEST_CASE("orthogonality tests agree with dense inner products") {
  std::mt19937_64 rng(2);
  int disagreements = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng() % 4;
    StabilizerFrame f = pairable_frame(n, rng);
    StabilizerFrame g = pairable_frame(n, rng);
    if (rng() & 1U) {
      g = f;
      g.clear_entries();
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (rng() & 1U) g.add_entry(f.phase(j), 1.0);
      }
      if (g.empty()) continue;
    }
    Multiframe mf(n);
    mf.frames() = {f, g};
    const bool dense = cross_frame_orthogonal(mf);
    if (frames_orthogonal(f, g, false) != dense) ++disagreements;
    if (frames_orthogonal(f, g, true) != dense) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("orthogonalize restores the invariant") {
  Multiframe mf(2);
  StabilizerFrame zero = StabilizerFrame::basis(BasisState(2));
  zero.scale(0.6);
  StabilizerFrame plus = StabilizerFrame::basis(BasisState(2));
  plus.rotate(CliffordOp{CliffordKind::H, 0, 0});
  plus.scale(0.8);
  mf.frames() = {zero, plus};
  const Vec before = sum_dense(mf.frames(), 2);
  CHECK_FALSE(mf.check_orthogonality());
  mf.orthogonalize();
  CHECK(mf.check_orthogonality());
  CHECK(cross_frame_orthogonal(mf));
  CHECK(same(sum_dense(mf.frames(), 2), before));
}

TEST_CASE("engine matches the oracle and keeps frames orthogonal") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 3 + rng() % 4;
    Multiframe mf(n);
    DenseState d(n);
    std::mt19937_64 coins(t);
    const std::size_t gates = 1 + rng() % 40;
    for (std::size_t k = 0; k < gates; ++k) {
      const Gate g = random_gate(n, rng);
      mf.apply(g, coins);
      d.apply(g);
      if (!g.is_clifford()) REQUIRE(cross_frame_orthogonal(mf));
    }
    CHECK(equal_up_to_global_phase(mf.to_dense(), d.amplitudes(), 1e-9));
    CHECK(mf.norm2() == Catch::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("measurement follows oracle probabilities") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 3 + rng() % 3;
    Multiframe mf(n);
    DenseState d(n);
    std::mt19937_64 coins(t);
    for (int k = 0; k < 20; ++k) {
      const Gate g = random_gate(n, rng);
      mf.apply(g, coins);
      d.apply(g);
    }
    const std::size_t q = rng() % n;
    const double p1 = d.probability_one(q);
    CHECK(mf.probability_one(q) == Catch::Approx(p1).margin(1e-9));
    const bool x = mf.measure_with(q, 0.3);
    CHECK(x == !(0.3 < 1.0 - p1));
    d.project(q, x);
    CHECK(equal_up_to_global_phase(mf.to_dense(), d.amplitudes(), 1e-9));
  }
}

TEST_CASE("Bell measurements are correlated") {
  Circuit c;
  c.num_qubits = 2;
  c.add(make_gate(GateKind::H, 0));
  c.add(make_gate(GateKind::CNOT, 0, 1));
  c.add(make_gate(GateKind::MEASURE, 0));
  c.add(make_gate(GateKind::MEASURE, 1));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed);
    const Multiframe mf = simulate(c, rng);
    REQUIRE(mf.stats().outcomes.size() == 2);
    CHECK(mf.stats().outcomes[0] == mf.stats().outcomes[1]);
    CHECK(mf.stats().gate_counts.at("measure") == 2);
  }
}

TEST_CASE("state counts on the QFT of the all-ones input") {
  for (std::size_t n = 2; n <= 8; ++n) {
    Circuit c;
    c.num_qubits = n;
    for (std::size_t q = 0; q < n; ++q) c.add(make_gate(GateKind::X, q));
    for (const Gate& g : gen_qft(n).gates) c.add(g);
    std::mt19937_64 rng(1);
    const Multiframe mf = simulate(c, rng);
    CHECK(mf.stats().max_states == (std::size_t{1} << (n - 1)));
  }
}

TEST_CASE("stabilizer circuits stay in one frame with one entry") {
  std::mt19937_64 rng(5);
  const Circuit c = gen_random_stabilizer(60, 1.2, rng);
  const Multiframe mf = simulate(c, rng);
  CHECK(mf.stats().max_frames == 1);
  CHECK(mf.stats().max_states == 1);
  CHECK(mf.stats().outcomes.size() == 60);
}
