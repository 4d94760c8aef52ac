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
#include "framesim/errors.hpp"
#include "framesim/frame.hpp"
#include "oracle_util.hpp"

using namespace framesim;
using namespace framesim::testing;

namespace {

bool same(const Vec& a, const Vec& b, double tol = 1e-10) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k]) > tol) return false;
  }
  return true;
}

std::size_t other(std::size_t n, std::size_t a, std::mt19937_64& rng) {
  return (a + 1 + rng() % (n - 1)) % n;
}

// Random frame/oracle pair grown with Clifford, T and Toffoli steps.
struct Pair {
  StabilizerFrame f;
  DenseState d;
};

void step(Pair& p, std::mt19937_64& rng) {
  const std::size_t n = p.d.num_qubits();
  const std::size_t k = rng() % 10;
  if (k < 6 || n < 3) {
    const CliffordOp op = random_clifford(n, rng);
    p.f.rotate(op);
    p.d.apply(to_gate(op));
  } else if (k < 8) {
    const std::size_t q = rng() % n;
    const bool dg = rng() & 1U;
    p.f.apply_t(q, dg);
    p.d.apply(make_gate(dg ? GateKind::TDG : GateKind::T, q));
  } else if (k < 9) {
    const std::size_t c = rng() % n, t = other(n, c, rng);
    const double alpha = M_PI / static_cast<double>(1U << (1 + rng() % 3));
    p.f.apply_controlled_phase(c, t, alpha);
    p.d.apply(make_gate(GateKind::CRZ, c, t, 0, alpha));
  } else {
    const std::size_t a = rng() % n, b = other(n, a, rng);
    std::size_t t = rng() % n;
    while (t == a || t == b) t = rng() % n;
    p.f.apply_toffoli(a, b, t);
    p.d.apply(make_gate(GateKind::TOF, a, b, t));
  }
}

Pair grow(std::size_t n, std::size_t steps, std::mt19937_64& rng) {
  Pair p{StabilizerFrame::basis(BasisState(n)), DenseState(n)};
  for (std::size_t s = 0; s < steps; ++s) step(p, rng);
  return p;
}

}  // namespace

TEST_CASE("basis frame") {
  const StabilizerFrame f = StabilizerFrame::basis(BasisState::from_string("101"));
  REQUIRE(f.size() == 1);
  CHECK(f.amplitude(0) == Amplitude(1.0));
  const Vec v = f.to_dense();
  CHECK(v[0b101] == Amplitude(1.0));
  CHECK(f.norm2() == Catch::Approx(1.0));
}

TEST_CASE("gate application tracks the oracle including global phase") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 6;
    Pair p = grow(n, 30, rng);
    CHECK(same(p.f.to_dense(), p.d.amplitudes()));
    CHECK(p.f.norm2() == Catch::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("rotation of a multi-entry frame") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 3 + rng() % 4;
    Pair p = grow(n, 20, rng);
    p.f.cofactor(rng() % n);
    for (int g = 0; g < 20; ++g) {
      const CliffordOp op = random_clifford(n, rng);
      p.f.rotate(op);
      p.d.apply(to_gate(op));
    }
    CHECK(same(p.f.to_dense(), p.d.amplitudes()));
  }
}

TEST_CASE("cofactor keeps the state and at most doubles entries") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 6;
    Pair p = grow(n, 25, rng);
    const std::size_t before = p.f.size();
    const std::size_t q = rng() % n;
    const bool random = p.f.matrix().measure_kind(q).random;
    p.f.cofactor(q);
    CHECK(same(p.f.to_dense(), p.d.amplitudes(), 1e-12));
    CHECK(p.f.size() <= 2 * before);
    CHECK(p.f.size() >= (random ? 1U : before));
    CHECK_FALSE(p.f.matrix().measure_kind(q).random);
  }
}

TEST_CASE("cofactor of a uniform superposition") {
  StabilizerFrame f = StabilizerFrame::basis(BasisState(2));
  f.rotate(CliffordOp{CliffordKind::H, 0, 0});
  f.rotate(CliffordOp{CliffordKind::H, 1, 0});
  CHECK(f.cofactor(0) == 2);
  CHECK(f.size() == 2);
  CHECK(f.cofactor(1) == 4);
  CHECK(f.size() == 4);
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(std::abs(f.amplitude(j)) == Catch::Approx(0.5));
  }
}

TEST_CASE("measurement probabilities and restriction") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 5;
    Pair p = grow(n, 25, rng);
    const std::size_t q = rng() % n;
    const double p1 = p.d.probability_one(q);
    CHECK(p.f.probability_one(q) == Catch::Approx(p1).margin(1e-10));
    const bool x = p1 > 0.5;
    const double px = x ? p1 : 1 - p1;
    p.f.restrict_outcome(q, x);
    p.d.project(q, x);
    p.f.scale(1.0 / std::sqrt(px));
    CHECK(same(p.f.to_dense(), p.d.amplitudes(), 1e-9));
  }
}

TEST_CASE("canonicalize and amplitude lookups preserve the state") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 5;
    Pair p = grow(n, 30, rng);
    p.f.canonicalize();
    const Vec v = p.f.to_dense();
    CHECK(same(v, p.d.amplitudes()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      BasisState b(n);
      for (std::size_t j = 0; j < n; ++j) b.set(j, (i >> j) & 1U);
      CHECK(std::abs(p.f.amplitude_of(b) - v[i]) < 1e-10);
    }
  }
}

TEST_CASE("duplicate entries are combined and zeros pruned") {
  StabilizerFrame f = StabilizerFrame::basis(BasisState(2));
  PhaseVector s(2);
  f.add_entry(s, Amplitude(-1.0));
  s.set(1, true);
  f.add_entry(s, Amplitude(0.5));
  f.add_entry(s, Amplitude(0.5));
  f.normalize_entries();
  REQUIRE(f.size() == 1);
  CHECK(f.amplitude(0) == Amplitude(1.0));
  CHECK(f.phase_vector(0) == s);
}

TEST_CASE("controlled phase on deterministic controls needs no split") {
  StabilizerFrame f = StabilizerFrame::basis(BasisState::from_string("11"));
  f.apply_controlled_phase(0, 1, M_PI / 2);
  REQUIRE(f.size() == 1);
  CHECK(std::abs(f.amplitude(0) - Amplitude(0, 1)) < 1e-12);
}

TEST_CASE("qubit range checks") {
  StabilizerFrame f = StabilizerFrame::basis(BasisState(2));
  CHECK_THROWS_AS(f.cofactor(2), QubitOutOfRange);
  CHECK_THROWS_AS(f.apply_t(3, false), QubitOutOfRange);
  CHECK_THROWS(f.apply_toffoli(0, 0, 1));
}
