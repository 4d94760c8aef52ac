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

#include "framesim/tableau.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <queue>
#include <sstream>
#include <utility>

#include "framesim/errors.hpp"

namespace framesim {

namespace {

std::complex<double> i_power(unsigned k) {
  switch (k & 3U) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void check_gate(const CliffordOp& gate, std::size_t n) {
  auto bad = [n](std::size_t q) {
    return QubitOutOfRange("qubit " + std::to_string(q) +
                           " out of range for " + std::to_string(n) +
                           " qubits");
  };
  if (gate.qubit >= n) throw bad(gate.qubit);
  if (gate.kind == CliffordKind::CNOT) {
    if (gate.target >= n) throw bad(gate.target);
    if (gate.target == gate.qubit) {
      throw std::invalid_argument("CNOT control equals target");
    }
  }
}

unsigned popcount_and(std::span<const Word> a, std::span<const Word> b) {
  unsigned c = 0;
  for (std::size_t k = 0; k < a.size(); ++k) c += std::popcount(a[k] & b[k]);
  return c;
}

}  // namespace

void RowOpMemo::apply(std::span<Word> signs, bool forced) const {
  if (any_flip_) xor_into(signs, flips_.words());
  for (const RowOp& op : ops_) {
    if (op.kind == RowOp::Kind::Mul) {
      const bool v = test_bit(signs, op.dst) ^ test_bit(signs, op.src) ^ op.flip;
      set_bit(signs, op.dst, v);
    } else {
      set_bit(signs, op.dst, forced);
    }
  }
  if (!perm_.empty()) {
    thread_local std::vector<Word> old;
    old.assign(signs.begin(), signs.end());
    std::fill(signs.begin(), signs.end(), 0);
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      if (test_bit(old, perm_[i])) set_bit(signs, i, true);
    }
  }
}

std::size_t RowOpMemo::multiplications() const {
  return static_cast<std::size_t>(
      std::count_if(ops_.begin(), ops_.end(), [](const RowOp& op) {
        return op.kind == RowOp::Kind::Mul;
      }));
}

bool RowOpMemo::has_reset() const {
  return std::any_of(ops_.begin(), ops_.end(), [](const RowOp& op) {
    return op.kind == RowOp::Kind::Reset;
  });
}

bool RowOpMemo::empty() const {
  return !any_flip_ && ops_.empty() && perm_.empty();
}

StabilizerMatrix::StabilizerMatrix(std::size_t n)
    : n_(n),
      w_(words_for(n)),
      x_(n * words_for(n), 0),
      z_(n * words_for(n), 0),
      signs_(n),
      leads_(n, 2 * n) {}

StabilizerMatrix StabilizerMatrix::init_basis(const BasisState& bits) {
  const std::size_t n = bits.size();
  StabilizerMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    set_bit(m.mz(j), j, true);
    m.signs_.set(j, bits[j]);
  }
  m.refresh_profile();
  return m;
}

StabilizerMatrix StabilizerMatrix::from_rows(
    const std::vector<std::string>& rows) {
  std::vector<PauliOperator> ops;
  for (const std::string& r : rows) ops.push_back(PauliOperator::from_string(r));
  const std::size_t n = ops.size();
  StabilizerMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ops[i].num_qubits() != n) {
      throw SizeMismatch("stabilizer matrix rows must have " +
                         std::to_string(n) + " literals");
    }
    if (ops[i].phase_exp() & 1U) {
      throw ContractViolation("stabilizer row with imaginary phase");
    }
    std::copy(ops[i].x().begin(), ops[i].x().end(), m.mx(i).begin());
    std::copy(ops[i].z().begin(), ops[i].z().end(), m.mz(i).begin());
    m.signs_.set(i, ops[i].phase_exp() == 2);
  }
  m.refresh_profile();
  return m;
}

PauliOperator StabilizerMatrix::row(std::size_t i) const {
  PauliOperator p(n_);
  std::copy(row_x(i).begin(), row_x(i).end(), p.x().begin());
  std::copy(row_z(i).begin(), row_z(i).end(), p.z().begin());
  p.set_phase_exp(signs_[i] ? 2 : 0);
  return p;
}

std::size_t StabilizerMatrix::compute_lead(std::size_t i,
                                           std::size_t from) const {
  const std::size_t limit = 2 * n_;
  if (from < n_) {
    const auto xs = row_x(i);
    for (std::size_t k = from / kWordBits; k < w_; ++k) {
      Word v = xs[k];
      if (k == from / kWordBits) v &= ~Word{0} << (from % kWordBits);
      if (v != 0) return k * kWordBits + std::countr_zero(v);
    }
    from = n_;
  }
  const std::size_t zf = from - n_;
  const auto zs = row_z(i);
  for (std::size_t k = zf / kWordBits; k < w_; ++k) {
    Word v = zs[k];
    if (k == zf / kWordBits) v &= ~Word{0} << (zf % kWordBits);
    if (v != 0) return n_ + k * kWordBits + std::countr_zero(v);
  }
  return limit;
}

void StabilizerMatrix::refresh_profile() {
  leads_.resize(n_);
  x_rank_ = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    leads_[i] = compute_lead(i);
    if (leads_[i] < n_) ++x_rank_;
  }
  anchor_modulus_ = std::pow(2.0, -0.5 * static_cast<double>(x_rank_));
}

void StabilizerMatrix::mul_rows(std::size_t dst, std::size_t src,
                                RowOpMemo& memo) {
  const unsigned k = product_phase(row_x(src), row_z(src), row_x(dst),
                                   row_z(dst));
  if (k & 1U) throw ContractViolation("stabilizer rows anticommute");
  const bool flip = (k == 2);
  xor_into(mx(dst), row_x(src));
  xor_into(mz(dst), row_z(src));
  signs_.set(dst, signs_[dst] ^ signs_[src] ^ flip);
  memo.ops_.push_back({RowOp::Kind::Mul, static_cast<std::uint32_t>(dst),
                       static_cast<std::uint32_t>(src), flip});
}

void StabilizerMatrix::repair(RowOpMemo& memo) {
  const std::size_t limit = 2 * n_;
  bool ordered = true;
  for (std::size_t i = 0; i < n_; ++i) {
    leads_[i] = compute_lead(i);
    if (leads_[i] == limit || (i > 0 && leads_[i] <= leads_[i - 1])) {
      ordered = false;
    }
  }
  if (ordered) {
    refresh_profile();
    return;
  }

  using Item = std::pair<std::size_t, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (std::size_t i = 0; i < n_; ++i) {
    heap.emplace(leads_[i], static_cast<std::uint32_t>(i));
  }
  std::vector<std::uint32_t> order;
  order.reserve(n_);
  std::vector<std::uint32_t> group;
  while (!heap.empty()) {
    const std::size_t col = heap.top().first;
    if (col == limit) throw ContractViolation("stabilizer rows are dependent");
    group.clear();
    while (!heap.empty() && heap.top().first == col) {
      group.push_back(heap.top().second);
      heap.pop();
    }
    std::uint32_t pivot = group.front();
    if (group.size() > 1) {
      std::size_t best = 0;
      for (std::uint32_t r : group) {
        const std::size_t second = compute_lead(r, col + 1);
        if (second > best || (second == best && r < pivot)) {
          best = second;
          pivot = r;
        }
      }
      for (std::uint32_t r : group) {
        if (r == pivot) continue;
        mul_rows(r, pivot, memo);
        leads_[r] = compute_lead(r, col + 1);
        heap.emplace(leads_[r], r);
      }
    }
    order.push_back(pivot);
  }

  bool identity = true;
  for (std::size_t i = 0; i < n_; ++i) identity &= (order[i] == i);
  if (!identity) {
    std::vector<Word> nx(x_.size()), nz(z_.size());
    PhaseVector ns(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      std::copy_n(x_.begin() + order[i] * w_, w_, nx.begin() + i * w_);
      std::copy_n(z_.begin() + order[i] * w_, w_, nz.begin() + i * w_);
      ns.set(i, signs_[order[i]]);
    }
    x_ = std::move(nx);
    z_ = std::move(nz);
    signs_ = std::move(ns);
    memo.perm_ = std::move(order);
  }
  refresh_profile();
}

bool StabilizerMatrix::is_row_echelon() const {
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t l = compute_lead(i);
    if (l == 2 * n_ || l != leads_[i]) return false;
    if (i > 0 && l <= leads_[i - 1]) return false;
  }
  return true;
}

bool StabilizerMatrix::is_valid() const {
  if (!is_row_echelon()) return false;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const bool anti = (popcount_and(row_x(i), row_z(j)) +
                         popcount_and(row_z(i), row_x(j))) & 1U;
      if (anti) return false;
    }
  }
  return true;
}

RowOpMemo StabilizerMatrix::conjugate(const CliffordOp& gate) {
  check_gate(gate, n_);
  RowOpMemo memo(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (conjugate_planes(mx(i), mz(i), gate)) {
      memo.flips_.flip(i);
      memo.any_flip_ = true;
      signs_.flip(i);
    }
  }
  switch (gate.kind) {
    case CliffordKind::X:
    case CliffordKind::Y:
    case CliffordKind::Z:
      break;
    default:
      repair(memo);
  }
  return memo;
}

RowOpMemo StabilizerMatrix::to_row_echelon() {
  RowOpMemo memo(n_);
  repair(memo);
  return memo;
}

RowOpMemo StabilizerMatrix::canonicalize() {
  RowOpMemo memo(n_);
  for (std::size_t r = 1; r < n_; ++r) {
    const std::size_t c = leads_[r];
    for (std::size_t i = 0; i < r; ++i) {
      const bool hit = c < n_ ? test_bit(row_x(i), c) : test_bit(row_z(i), c - n_);
      if (hit) mul_rows(i, r, memo);
    }
  }
  return memo;
}

MeasureKind StabilizerMatrix::measure_kind(std::size_t q) const {
  if (q >= n_) throw QubitOutOfRange("measured qubit out of range");
  for (std::size_t i = 0; i < x_rank_; ++i) {
    if (test_bit(row_x(i), q)) return {true, false};
  }
  const PhaseVector mask = outcome_mask(q);
  return {false, parity_of_and(mask.words(), signs_.words())};
}

PhaseVector StabilizerMatrix::outcome_mask(std::size_t q) const {
  if (q >= n_) throw QubitOutOfRange("measured qubit out of range");
  std::vector<Word> v(w_, 0);
  set_bit(v, q, true);
  PhaseVector mask(n_);
  for (std::size_t r = x_rank_; r < n_; ++r) {
    if (test_bit(v, leads_[r] - n_)) {
      xor_into(v, row_z(r));
      mask.set(r, true);
    }
  }
  if (!all_zero(v)) throw ContractViolation("qubit outcome is not determined");
  return mask;
}

RowOpMemo StabilizerMatrix::collapse(std::size_t q, bool forced_outcome) {
  if (q >= n_) throw QubitOutOfRange("collapsed qubit out of range");
  std::size_t j = n_;
  for (std::size_t i = x_rank_; i-- > 0;) {
    if (test_bit(row_x(i), q)) {
      j = i;
      break;
    }
  }
  if (j == n_) throw ContractViolation("collapse on a deterministic qubit");
  RowOpMemo memo(n_);
  for (std::size_t i = 0; i < j; ++i) {
    if (test_bit(row_x(i), q)) mul_rows(i, j, memo);
  }
  std::fill(mx(j).begin(), mx(j).end(), 0);
  std::fill(mz(j).begin(), mz(j).end(), 0);
  set_bit(mz(j), q, true);
  signs_.set(j, forced_outcome);
  memo.ops_.push_back({RowOp::Kind::Reset, static_cast<std::uint32_t>(j),
                       static_cast<std::uint32_t>(j), false});
  repair(memo);
  return memo;
}

void StabilizerMatrix::anchor(std::span<const Word> signs,
                              std::span<Word> out) const {
  std::fill(out.begin(), out.end(), 0);
  for (std::size_t r = n_; r-- > x_rank_;) {
    const bool bit = test_bit(signs, r) ^ parity_of_and(row_z(r), out);
    if (bit) set_bit(out, leads_[r] - n_, true);
  }
}

BasisState StabilizerMatrix::anchor(const PhaseVector& signs) const {
  BasisState b(n_);
  anchor(signs.words(), b.words());
  return b;
}

std::complex<double> StabilizerMatrix::canonical_amplitude(
    std::span<const Word> signs, std::span<const Word> b) const {
  thread_local std::vector<Word> scratch;
  scratch.assign(4 * w_, 0);
  std::span<Word> b0(scratch.data(), w_);
  std::span<Word> d(scratch.data() + w_, w_);
  std::span<Word> ax(scratch.data() + 2 * w_, w_);
  std::span<Word> az(scratch.data() + 3 * w_, w_);
  anchor(signs, b0);
  for (std::size_t k = 0; k < w_; ++k) d[k] = b[k] ^ b0[k];
  unsigned phase = 0;
  for (std::size_t r = 0; r < x_rank_; ++r) {
    if (!test_bit(d, leads_[r])) continue;
    phase += product_phase(ax, az, row_x(r), row_z(r));
    if (test_bit(signs, r)) phase += 2;
    xor_into(ax, row_x(r));
    xor_into(az, row_z(r));
    xor_into(d, row_x(r));
  }
  if (!all_zero(d)) return {0.0, 0.0};
  phase += popcount_and(ax, az);
  phase += 2 * (popcount_and(az, b0) & 1U);
  return anchor_modulus_ * i_power(phase);
}

std::vector<CliffordOp> StabilizerMatrix::basis_form_circuit() const {
  StabilizerMatrix m = *this;
  m.canonicalize();
  std::vector<CliffordOp> gates;
  auto run = [&m](const CliffordOp& g) {
    for (std::size_t i = 0; i < m.n_; ++i) conjugate_planes(m.mx(i), m.mz(i), g);
  };
  auto emit = [&](CliffordOp g) {
    gates.push_back(g);
    run(g);
  };
  const std::size_t xr = m.x_rank_;
  std::vector<std::size_t> pivots(xr);
  std::vector<bool> is_pivot(n_, false);
  for (std::size_t r = 0; r < xr; ++r) {
    pivots[r] = m.leads_[r];
    is_pivot[pivots[r]] = true;
  }
  for (std::size_t r = 0; r < xr; ++r) {
    for (std::size_t q = 0; q < n_; ++q) {
      if (!is_pivot[q] && test_bit(m.row_x(r), q)) {
        emit({CliffordKind::CNOT, pivots[r], q});
      }
    }
  }
  for (std::size_t r = 0; r < xr; ++r) {
    if (test_bit(m.row_z(r), pivots[r])) emit({CliffordKind::P, pivots[r]});
  }
  for (std::size_t r = 0; r < xr; ++r) {
    for (std::size_t s = r + 1; s < xr; ++s) {
      if (test_bit(m.row_z(r), pivots[s])) {
        emit({CliffordKind::H, pivots[s]});
        emit({CliffordKind::CNOT, pivots[r], pivots[s]});
        emit({CliffordKind::H, pivots[s]});
      }
    }
  }
  for (std::size_t r = 0; r < xr; ++r) emit({CliffordKind::H, pivots[r]});
  return gates;
}

bool StabilizerMatrix::is_single_z(std::size_t i, std::size_t& qubit) const {
  if (!all_zero(row_x(i))) return false;
  std::size_t count = 0;
  for (Word v : row_z(i)) count += std::popcount(v);
  if (count != 1) return false;
  qubit = first_set(row_z(i), n_);
  return true;
}

std::size_t StabilizerMatrix::literal_hash() const {
  std::size_t h = n_;
  auto mix = [&h](Word v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (Word v : x_) mix(v);
  for (Word v : z_) mix(v);
  return h;
}

std::string StabilizerMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < n_; ++i) {
    out << (signs_[i] ? '-' : '+') << row(i).to_string().substr(
                                          row(i).phase_exp() == 2 ? 1 : 0)
        << '\n';
  }
  return out.str();
}

}  // namespace framesim
