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

#include <complex>
#include <random>
#include <vector>

#include "framesim/errors.hpp"
#include "framesim/pauli.hpp"

using namespace framesim;
using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

namespace {

Mat literal_matrix(Pauli p) {
  const C i{0, 1};
  switch (p) {
    case Pauli::I: return {{1, 0}, {0, 1}};
    case Pauli::X: return {{0, 1}, {1, 0}};
    case Pauli::Y: return {{0, -i}, {i, 0}};
    default: return {{1, 0}, {0, -1}};
  }
}

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.size() * b.size(), std::vector<C>(a.size() * b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = 0; l < b.size(); ++l)
          r[i * b.size() + k][j * b.size() + l] = a[i][j] * b[k][l];
  return r;
}

Mat matmul(const Mat& a, const Mat& b) {
  Mat r(a.size(), std::vector<C>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k)
      for (std::size_t j = 0; j < a.size(); ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Mat dagger(const Mat& a) {
  Mat r(a.size(), std::vector<C>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r[i][j] = std::conj(a[j][i]);
  return r;
}

// Qubit 0 is the most significant tensor factor.
Mat pauli_matrix(const PauliOperator& p) {
  Mat m{{1}};
  for (std::size_t j = 0; j < p.num_qubits(); ++j) {
    m = kron(m, literal_matrix(p.literal(j)));
  }
  const C phase = std::pow(C{0, 1}, static_cast<int>(p.phase_exp()));
  for (auto& row : m)
    for (auto& v : row) v *= phase;
  return m;
}

Mat gate_matrix(const CliffordOp& g, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  Mat u(dim, std::vector<C>(dim));
  const double s = 1 / std::sqrt(2.0);
  const C i{0, 1};
  auto bit = [n](std::size_t index, std::size_t q) {
    return (index >> (n - 1 - q)) & 1U;
  };
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t b = bit(col, g.qubit);
    const std::size_t flip = col ^ (std::size_t{1} << (n - 1 - g.qubit));
    switch (g.kind) {
      case CliffordKind::H:
        u[col & ~(std::size_t{1} << (n - 1 - g.qubit))][col] += s;
        u[col | (std::size_t{1} << (n - 1 - g.qubit))][col] += b ? -s : s;
        break;
      case CliffordKind::P: u[col][col] = b ? i : 1.0; break;
      case CliffordKind::PDG: u[col][col] = b ? -i : 1.0; break;
      case CliffordKind::X: u[flip][col] = 1; break;
      case CliffordKind::Y: u[flip][col] = b ? -i : i; break;
      case CliffordKind::Z: u[col][col] = b ? -1.0 : 1.0; break;
      case CliffordKind::CNOT: {
        const std::size_t out =
            b ? col ^ (std::size_t{1} << (n - 1 - g.target)) : col;
        u[out][col] = 1;
        break;
      }
    }
  }
  return u;
}

bool close(const Mat& a, const Mat& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (std::abs(a[i][j] - b[i][j]) > 1e-12) return false;
  return true;
}

PauliOperator random_pauli(std::size_t n, std::mt19937_64& rng) {
  PauliOperator p(n);
  for (std::size_t j = 0; j < n; ++j) p.set_literal(j, static_cast<Pauli>(rng() % 4));
  p.set_phase_exp(static_cast<unsigned>(rng() % 4));
  return p;
}

}  // namespace

TEST_CASE("string round trip keeps literals and phase") {
  for (const char* s : {"XZI", "-iIYXI", "+iZ", "-Y", "IIII"}) {
    const PauliOperator p = PauliOperator::from_string(s);
    const std::string out = p.to_string();
    CHECK(PauliOperator::from_string(out) == p);
  }
  CHECK(PauliOperator::from_string("+XY").to_string() == "XY");
  CHECK(PauliOperator::from_string("-iIYXI").phase_exp() == 3);
  CHECK(PauliOperator::from_string("-iIYXI").literal(1) == Pauli::Y);
  CHECK_THROWS(PauliOperator::from_string("XQ"));
}

TEST_CASE("literal encoding follows the bit planes") {
  const PauliOperator p = PauliOperator::from_string("IZXY");
  CHECK(p.x()[0] == 0b1100);
  CHECK(p.z()[0] == 0b1010);
}

TEST_CASE("single-qubit products") {
  auto mul = [](const char* a, const char* b) {
    return multiply(PauliOperator::from_string(a), PauliOperator::from_string(b))
        .to_string();
  };
  CHECK(mul("X", "Y") == "+iZ");
  CHECK(mul("Y", "X") == "-iZ");
  CHECK(mul("Z", "X") == "+iY");
  CHECK(mul("X", "Z") == "-iY");
  CHECK(mul("Y", "Y") == "I");
  CHECK(mul("XX", "ZZ") == "-YY");
}

TEST_CASE("multiply agrees with matrix products") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const PauliOperator a = random_pauli(n, rng), b = random_pauli(n, rng);
    CHECK(close(pauli_matrix(multiply(a, b)),
                matmul(pauli_matrix(a), pauli_matrix(b))));
    const Mat ab = matmul(pauli_matrix(a), pauli_matrix(b));
    const Mat ba = matmul(pauli_matrix(b), pauli_matrix(a));
    CHECK(commutes(a, b) == close(ab, ba));
  }
}

TEST_CASE("products over many words") {
  std::mt19937_64 rng(5);
  const PauliOperator a = random_pauli(150, rng), b = random_pauli(150, rng);
  const PauliOperator ab = multiply(a, b);
  unsigned expect = a.phase_exp() + b.phase_exp();
  for (std::size_t j = 0; j < 150; ++j) {
    PauliOperator sa(1), sb(1);
    sa.set_literal(0, a.literal(j));
    sb.set_literal(0, b.literal(j));
    const PauliOperator s = multiply(sa, sb);
    CHECK(s.literal(0) == ab.literal(j));
    expect += s.phase_exp();
  }
  CHECK(ab.phase_exp() == (expect & 3U));
}

TEST_CASE("conjugation matches U P U-dagger") {
  std::mt19937_64 rng(21);
  const CliffordKind kinds[] = {CliffordKind::H, CliffordKind::P,
                                CliffordKind::PDG, CliffordKind::X,
                                CliffordKind::Y, CliffordKind::Z,
                                CliffordKind::CNOT};
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 2 + rng() % 3;
    const PauliOperator p = random_pauli(n, rng);
    CliffordOp g{kinds[rng() % 7], rng() % n, 0};
    if (g.kind == CliffordKind::CNOT) {
      g.target = (g.qubit + 1 + rng() % (n - 1)) % n;
    }
    const Mat u = gate_matrix(g, n);
    const Mat expect = matmul(matmul(u, pauli_matrix(p)), dagger(u));
    CHECK(close(pauli_matrix(conjugate_single(p, g)), expect));
  }
}

TEST_CASE("named conjugation rules") {
  auto conj = [](const char* p, CliffordOp g) {
    return conjugate_single(PauliOperator::from_string(p), g).to_string();
  };
  CHECK(conj("X", {CliffordKind::H, 0}) == "Z");
  CHECK(conj("Y", {CliffordKind::H, 0}) == "-Y");
  CHECK(conj("X", {CliffordKind::P, 0}) == "Y");
  CHECK(conj("Y", {CliffordKind::P, 0}) == "-X");
  CHECK(conj("XI", {CliffordKind::CNOT, 0, 1}) == "XX");
  CHECK(conj("IZ", {CliffordKind::CNOT, 0, 1}) == "ZZ");
  CHECK(conj("Z", {CliffordKind::X, 0}) == "-Z");
}

TEST_CASE("inverse sequences undo conjugation") {
  std::mt19937_64 rng(8);
  std::vector<CliffordOp> ops;
  for (int t = 0; t < 30; ++t) {
    const auto kind = static_cast<CliffordKind>(rng() % 7);
    const std::size_t a = rng() % 4;
    ops.push_back({kind, a, kind == CliffordKind::CNOT ? (a + 1) % 4 : 0});
  }
  const PauliOperator p = random_pauli(4, rng);
  PauliOperator q = p;
  for (const CliffordOp& g : ops) q = conjugate_single(q, g);
  for (const CliffordOp& g : inverse(ops)) q = conjugate_single(q, g);
  CHECK(q == p);
}

TEST_CASE("size and range errors") {
  CHECK_THROWS_AS(multiply(PauliOperator(2), PauliOperator(3)), SizeMismatch);
  CHECK_THROWS_AS(conjugate_single(PauliOperator(2), {CliffordKind::H, 2}),
                  QubitOutOfRange);
  CHECK_THROWS(conjugate_single(PauliOperator(2), {CliffordKind::CNOT, 1, 1}));
}
