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

#include "framesim/dense.hpp"

#include <cmath>
#include <sstream>

#include "framesim/errors.hpp"

namespace framesim {

DenseState::DenseState(std::size_t n) : n_(n) {
  if (n > kDenseMaxQubits) {
    throw CapacityExceeded("dense state limited to " +
                           std::to_string(kDenseMaxQubits) + " qubits");
  }
  amps_.assign(std::size_t{1} << n, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

DenseState DenseState::basis(const BasisState& bits) {
  DenseState s(bits.size());
  s.amps_[0] = 0.0;
  std::size_t index = 0;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j]) index |= std::size_t{1} << j;
  }
  s.amps_[index] = 1.0;
  return s;
}

void DenseState::check(std::size_t q) const {
  if (q >= n_) throw QubitOutOfRange("qubit out of range for dense state");
}

template <class Fn>
void DenseState::for_pairs(std::size_t q, Fn&& fn) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (!(i & bit)) fn(amps_[i], amps_[i | bit], i);
  }
}

void DenseState::apply(const Gate& g) {
  for (std::size_t k = 0; k < g.arity(); ++k) check(g.qubits[k]);
  const std::size_t q = g.qubits[0];
  const Amplitude I{0.0, 1.0};
  auto phase_on_one = [&](std::size_t mask, Amplitude f) {
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      if ((i & mask) == mask) amps_[i] *= f;
    }
  };
  const std::size_t bq = std::size_t{1} << q;
  switch (g.kind) {
    case GateKind::H:
      for_pairs(q, [](Amplitude& a0, Amplitude& a1, std::size_t) {
        const Amplitude s = (a0 + a1) * M_SQRT1_2;
        const Amplitude d = (a0 - a1) * M_SQRT1_2;
        a0 = s;
        a1 = d;
      });
      break;
    case GateKind::X:
      for_pairs(q, [](Amplitude& a0, Amplitude& a1, std::size_t) {
        std::swap(a0, a1);
      });
      break;
    case GateKind::Y:
      for_pairs(q, [&](Amplitude& a0, Amplitude& a1, std::size_t) {
        const Amplitude n0 = -I * a1;
        const Amplitude n1 = I * a0;
        a0 = n0;
        a1 = n1;
      });
      break;
    case GateKind::Z: phase_on_one(bq, -1.0); break;
    case GateKind::P: phase_on_one(bq, I); break;
    case GateKind::PDG: phase_on_one(bq, -I); break;
    case GateKind::T: phase_on_one(bq, std::polar(1.0, M_PI / 4)); break;
    case GateKind::TDG: phase_on_one(bq, std::polar(1.0, -M_PI / 4)); break;
    case GateKind::CRZ:
      phase_on_one(bq | (std::size_t{1} << g.qubits[1]), std::polar(1.0, g.angle));
      break;
    case GateKind::CNOT:
    case GateKind::TOF: {
      const std::size_t t = g.qubits[g.arity() - 1];
      std::size_t controls = 0;
      for (std::size_t k = 0; k + 1 < g.arity(); ++k) {
        controls |= std::size_t{1} << g.qubits[k];
      }
      for_pairs(t, [&](Amplitude& a0, Amplitude& a1, std::size_t i) {
        if ((i & controls) == controls) std::swap(a0, a1);
      });
      break;
    }
    case GateKind::MEASURE:
      throw std::invalid_argument("measurement is not a unitary gate");
  }
}

void DenseState::apply(const Circuit& c) {
  for (const Gate& g : c.gates) apply(g);
}

double DenseState::probability_one(std::size_t q) const {
  check(q);
  const std::size_t bit = std::size_t{1} << q;
  double p = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) p += std::norm(amps_[i]);
  }
  return p;
}

void DenseState::project(std::size_t q, bool x) {
  check(q);
  const std::size_t bit = std::size_t{1} << q;
  double kept = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (((i & bit) != 0) != x) {
      amps_[i] = 0.0;
    } else {
      kept += std::norm(amps_[i]);
    }
  }
  if (kept <= 0.0) throw ContractViolation("projection onto impossible outcome");
  const double s = 1.0 / std::sqrt(kept);
  for (Amplitude& a : amps_) a *= s;
}

bool DenseState::measure(std::size_t q, std::mt19937_64& rng) {
  const double p1 = probability_one(q);
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  const bool x = !(u < 1.0 - p1);
  project(q, x);
  return x;
}

double DenseState::norm2() const {
  double s = 0.0;
  for (const Amplitude& a : amps_) s += std::norm(a);
  return s;
}

std::string DenseState::dump() const {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    for (std::size_t j = 0; j < n_; ++j) out << ((i >> j) & 1U);
    out << ' ' << amps_[i].real() << ' ' << amps_[i].imag() << '\n';
  }
  return out.str();
}

bool equal_up_to_global_phase(const std::vector<std::complex<double>>& a,
                              const std::vector<std::complex<double>>& b,
                              double tol) {
  if (a.size() != b.size()) throw SizeMismatch("state sizes differ");
  std::size_t best = 0;
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (std::abs(b[i]) > std::abs(b[best])) best = i;
  }
  std::complex<double> c{1.0, 0.0};
  if (!b.empty() && std::abs(b[best]) > 0.0 && std::abs(a[best]) > 0.0) {
    c = a[best] / b[best];
    c /= std::abs(c);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - c * b[i]) > tol) return false;
  }
  return true;
}

}  // namespace framesim
