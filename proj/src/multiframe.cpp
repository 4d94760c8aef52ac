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

#include "framesim/multiframe.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "framesim/errors.hpp"

namespace framesim {

namespace {

using WordVec = std::vector<Word>;

struct WordVecHash {
  std::size_t operator()(const WordVec& v) const {
    std::size_t h = v.size();
    for (Word w : v) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

WordVec to_vec(std::span<const Word> s) { return WordVec(s.begin(), s.end()); }

/// Returns d in {0,1,2,3} with b = i^d a, or -1.
int power_of_i_ratio(Amplitude a, Amplitude b) {
  if (std::abs(a) < kPruneTolerance) return -1;
  const Amplitude q = b / a;
  static const Amplitude powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int d = 0; d < 4; ++d) {
    if (std::abs(q - powers[d]) <= kPairTolerance) return d;
  }
  return -1;
}

WordVec row_literal(const StabilizerMatrix& m, std::size_t i) {
  WordVec v(m.row_x(i).begin(), m.row_x(i).end());
  v.insert(v.end(), m.row_z(i).begin(), m.row_z(i).end());
  return v;
}

std::unordered_map<WordVec, std::size_t, WordVecHash> literal_index(
    const StabilizerMatrix& m) {
  std::unordered_map<WordVec, std::size_t, WordVecHash> index;
  for (std::size_t i = 0; i < m.num_qubits(); ++i) index.emplace(row_literal(m, i), i);
  return index;
}

/// Pairs (row of f, row of g) with identical literals.
std::vector<std::pair<std::size_t, std::size_t>> common_rows(
    const StabilizerMatrix& f, const StabilizerMatrix& g) {
  const auto index = literal_index(g);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < f.num_qubits(); ++i) {
    const auto it = index.find(row_literal(f, i));
    if (it != index.end()) out.emplace_back(i, it->second);
  }
  return out;
}

PauliOperator unsigned_product(const StabilizerMatrix& m,
                               std::span<const Word> tag, std::size_t offset) {
  PauliOperator acc(m.num_qubits());
  for (std::size_t i = 0; i < m.num_qubits(); ++i) {
    if (!test_bit(tag, offset + i)) continue;
    PauliOperator r = m.row(i);
    r.set_phase_exp(0);
    acc = multiply(acc, r);
  }
  return acc;
}

/// Single-word variant of the kernel test in frames_orthogonal.
bool small_kernel_orthogonal(const StabilizerFrame& f,
                             const StabilizerFrame& g) {
  const std::size_t n = f.num_qubits();
  const StabilizerMatrix& fm = f.matrix();
  const StabilizerMatrix& gm = g.matrix();
  struct Row {
    Word x, z, tag;
  };
  std::array<Row, 64> rows{};
  for (std::size_t i = 0; i < n; ++i) {
    rows[i] = {fm.row_x(i)[0], fm.row_z(i)[0], Word{1} << i};
    rows[n + i] = {gm.row_x(i)[0], gm.row_z(i)[0], Word{1} << (n + i)};
  }
  const std::size_t total = 2 * n;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < total && rank < total; ++c) {
    const bool in_x = c < n;
    const Word mask = Word{1} << (in_x ? c : c - n);
    auto hit = [&](const Row& r) { return ((in_x ? r.x : r.z) & mask) != 0; };
    std::size_t p = rank;
    while (p < total && !hit(rows[p])) ++p;
    if (p == total) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t r = rank + 1; r < total; ++r) {
      if (hit(rows[r])) {
        rows[r].x ^= rows[rank].x;
        rows[r].z ^= rows[rank].z;
        rows[r].tag ^= rows[rank].tag;
      }
    }
    ++rank;
  }
  const std::size_t kernel = total - rank;
  if (kernel == 0) return false;

  const Word low = n == 64 ? ~Word{0} : (Word{1} << n) - 1;
  Word intrinsic = 0;
  std::array<Word, 64> ftags{}, gtags{};
  for (std::size_t c = 0; c < kernel; ++c) {
    const Word tag = rows[rank + c].tag;
    ftags[c] = tag & low;
    gtags[c] = tag >> n;
    Word ax = 0, az = 0;
    unsigned phase = 0;
    auto absorb = [&](const StabilizerMatrix& m, Word bits) {
      for (; bits != 0; bits &= bits - 1) {
        const std::size_t i = static_cast<std::size_t>(std::countr_zero(bits));
        const Word bx = m.row_x(i)[0], bz = m.row_z(i)[0];
        phase += product_phase(std::span<const Word>(&ax, 1),
                               std::span<const Word>(&az, 1),
                               std::span<const Word>(&bx, 1),
                               std::span<const Word>(&bz, 1));
        ax ^= bx;
        az ^= bz;
      }
    };
    absorb(fm, ftags[c]);
    absorb(gm, gtags[c]);
    if (ax != 0 || az != 0 || (phase & 1U)) {
      throw ContractViolation("inconsistent stabilizer kernel");
    }
    if ((phase & 3U) == 2) intrinsic |= Word{1} << c;
  }
  auto signature = [&](Word signs, const std::array<Word, 64>& tags) {
    Word v = 0;
    for (std::size_t c = 0; c < kernel; ++c) {
      if (std::popcount(tags[c] & signs) & 1) v |= Word{1} << c;
    }
    return v;
  };
  std::unordered_set<Word> seen;
  seen.reserve(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    seen.insert(signature(f.phase(j)[0], ftags) ^ intrinsic);
  }
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (seen.count(signature(g.phase(j)[0], gtags))) return false;
  }
  return true;
}

}  // namespace

std::vector<StabilizerFrame> coalesce(StabilizerFrame f) {
  std::vector<StabilizerFrame> out;
  if (f.size() < 2) {
    out.push_back(std::move(f));
    return out;
  }
  f.canonicalize();
  const StabilizerMatrix& m = f.matrix();
  const std::size_t n = m.num_qubits();
  const std::size_t w = f.words();

  std::vector<std::size_t> zrows;
  std::vector<std::size_t> zqubit(n, n);
  WordVec nonz(w, ~Word{0});
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t q = 0;
    if (m.is_single_z(i, q)) {
      zrows.push_back(i);
      zqubit[i] = q;
      set_bit(nonz, i, false);
    }
  }
  if (zrows.empty()) {
    out.push_back(std::move(f));
    return out;
  }

  const std::size_t k = f.size();
  std::vector<WordVec> key(k);
  std::unordered_map<WordVec, std::size_t, WordVecHash> where;
  where.reserve(2 * k);
  for (std::size_t j = 0; j < k; ++j) {
    key[j].resize(w);
    for (std::size_t t = 0; t < w; ++t) key[j][t] = f.phase(j)[t] & nonz[t];
    where.emplace(to_vec(f.phase(j)), j);
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (key[a] != key[b]) return key[a] < key[b];
    const auto pa = f.phase(a), pb = f.phase(b);
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
  });

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> partner(k, kNone);
  auto try_pair = [&](std::size_t a, std::size_t b) {
    if (a == b || partner[a] != kNone || partner[b] != kNone) return false;
    if (power_of_i_ratio(f.amplitude(a), f.amplitude(b)) < 0) return false;
    partner[a] = b;
    partner[b] = a;
    return true;
  };

  WordVec probe(w);
  for (std::size_t j : order) {
    if (partner[j] != kNone) continue;
    for (std::size_t r : zrows) {
      std::copy_n(f.phase(j).begin(), w, probe.begin());
      flip_bit(probe, r);
      const auto it = where.find(probe);
      if (it != where.end() && try_pair(j, it->second)) break;
    }
  }
  constexpr std::size_t kScanLimit = 64;
  for (std::size_t s = 0; s < k; ++s) {
    const std::size_t j = order[s];
    if (partner[j] != kNone) continue;
    std::size_t scanned = 0;
    for (std::size_t t = s + 1; t < k && key[order[t]] == key[j]; ++t) {
      if (partner[order[t]] != kNone) continue;
      if (try_pair(j, order[t]) || ++scanned >= kScanLimit) break;
    }
  }

  StabilizerFrame residual(m);
  std::map<std::pair<WordVec, int>, std::vector<std::size_t>> groups;
  for (std::size_t s = 0; s < k; ++s) {
    const std::size_t j = order[s];
    if (partner[j] == kNone) {
      residual.add_entry(f.phase(j), f.amplitude(j));
      continue;
    }
    const std::size_t r = partner[j];
    WordVec e = to_vec(f.phase(j));
    xor_into(e, f.phase(r));
    const std::size_t v1 = first_set(e, n);
    if (test_bit(f.phase(j), v1)) continue;
    const int d = power_of_i_ratio(f.amplitude(j), f.amplitude(r));
    groups[{std::move(e), d}].push_back(j);
  }

  if (!residual.empty()) out.push_back(std::move(residual));
  for (const auto& [sig, members] : groups) {
    const auto& [e, d] = sig;
    StabilizerFrame g(m);
    g.reserve(members.size());
    for (std::size_t j : members) g.add_entry(f.phase(j), f.amplitude(j) * M_SQRT2);
    std::vector<std::size_t> rows;
    for (std::size_t r : zrows) {
      if (test_bit(e, r)) rows.push_back(r);
    }
    const std::size_t q1 = zqubit[rows.front()];
    std::vector<CliffordOp> gates{{CliffordKind::H, q1}};
    if (d == 1) gates.push_back({CliffordKind::P, q1});
    if (d == 2) gates.push_back({CliffordKind::Z, q1});
    if (d == 3) gates.push_back({CliffordKind::PDG, q1});
    for (std::size_t t = 1; t < rows.size(); ++t) {
      gates.push_back({CliffordKind::CNOT, q1, zqubit[rows[t]]});
    }
    g.rotate(gates);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<StabilizerFrame> coalesce_general(StabilizerFrame f) {
  const std::vector<CliffordOp> gates = f.matrix().basis_form_circuit();
  f.rotate(gates);
  std::vector<StabilizerFrame> parts = coalesce(std::move(f));
  const std::vector<CliffordOp> back = inverse(gates);
  for (StabilizerFrame& p : parts) p.rotate(back);
  return parts;
}

std::vector<PauliOperator> intersection(
    const std::vector<StabilizerFrame>& frames) {
  std::vector<PauliOperator> out;
  if (frames.empty()) return out;
  std::vector<StabilizerMatrix> ms;
  for (const StabilizerFrame& f : frames) {
    ms.push_back(f.matrix());
    ms.back().canonicalize();
  }
  std::vector<std::unordered_map<WordVec, std::size_t, WordVecHash>> idx;
  for (std::size_t i = 1; i < ms.size(); ++i) idx.push_back(literal_index(ms[i]));
  for (std::size_t r = 0; r < ms[0].num_qubits(); ++r) {
    const WordVec lit = row_literal(ms[0], r);
    const bool everywhere = std::all_of(idx.begin(), idx.end(), [&](const auto& m) {
      return m.count(lit) > 0;
    });
    if (everywhere) {
      PauliOperator p = ms[0].row(r);
      p.set_phase_exp(0);
      out.push_back(std::move(p));
    }
  }
  return out;
}

bool fast_path_orthogonal(const StabilizerFrame& f, std::size_t i,
                          const StabilizerFrame& g, std::size_t j) {
  for (const auto& [a, b] : common_rows(f.matrix(), g.matrix())) {
    if (test_bit(f.phase(i), a) != test_bit(g.phase(j), b)) return true;
  }
  return false;
}

bool frames_orthogonal(const StabilizerFrame& f, const StabilizerFrame& g,
                       bool use_fast_path) {
  if (f.empty() || g.empty()) return true;
  const std::size_t n = f.num_qubits();
  if (n == 0) return false;

  if (use_fast_path) {
    const auto common = common_rows(f.matrix(), g.matrix());
    if (!common.empty()) {
      const std::size_t cw = words_for(common.size());
      auto project = [&](const StabilizerFrame& h, std::size_t j, bool first) {
        WordVec v(cw, 0);
        for (std::size_t c = 0; c < common.size(); ++c) {
          const std::size_t row = first ? common[c].first : common[c].second;
          if (test_bit(h.phase(j), row)) set_bit(v, c, true);
        }
        return v;
      };
      std::unordered_set<WordVec, WordVecHash> seen;
      for (std::size_t j = 0; j < f.size(); ++j) seen.insert(project(f, j, true));
      bool disjoint = true;
      for (std::size_t j = 0; j < g.size() && disjoint; ++j) {
        disjoint = seen.count(project(g, j, false)) == 0;
      }
      if (disjoint) return true;
    }
  }

  if (n <= 32) return small_kernel_orthogonal(f, g);

  // Combinations of f rows and g rows whose literals cancel. Each gives a
  // common stabilizer element; two entries are orthogonal iff some such
  // element carries opposite signs in the two states.
  const std::size_t w = words_for(n);
  const std::size_t tw = words_for(2 * n);
  struct Stacked {
    WordVec lit;
    WordVec tag;
  };
  std::vector<Stacked> rows;
  rows.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back({row_literal(f.matrix(), i), WordVec(tw, 0)});
    set_bit(rows.back().tag, i, true);
  }
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back({row_literal(g.matrix(), i), WordVec(tw, 0)});
    set_bit(rows.back().tag, n + i, true);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < 2 * n && rank < rows.size(); ++c) {
    const std::size_t col = c < n ? c : w * kWordBits + (c - n);
    std::size_t p = rank;
    while (p < rows.size() && !test_bit(rows[p].lit, col)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (test_bit(rows[r].lit, col)) {
        xor_into(rows[r].lit, rows[rank].lit);
        xor_into(rows[r].tag, rows[rank].tag);
      }
    }
    ++rank;
  }
  const std::size_t kernel = rows.size() - rank;
  if (kernel == 0) return false;

  std::vector<bool> intrinsic(kernel);
  for (std::size_t c = 0; c < kernel; ++c) {
    const WordVec& tag = rows[rank + c].tag;
    const PauliOperator prod =
        multiply(unsigned_product(f.matrix(), tag, 0),
                 unsigned_product(g.matrix(), tag, n));
    if (!prod.is_identity_literal() || (prod.phase_exp() & 1U)) {
      throw ContractViolation("inconsistent stabilizer kernel");
    }
    intrinsic[c] = prod.phase_exp() == 2;
  }
  auto signature = [&](const StabilizerFrame& h, std::size_t j,
                       std::size_t offset, bool add_intrinsic) {
    WordVec v(words_for(kernel), 0);
    for (std::size_t c = 0; c < kernel; ++c) {
      const WordVec& tag = rows[rank + c].tag;
      bool bit = add_intrinsic && intrinsic[c];
      for (std::size_t i = 0; i < n; ++i) {
        if (test_bit(tag, offset + i) && test_bit(h.phase(j), i)) bit = !bit;
      }
      if (bit) set_bit(v, c, true);
    }
    return v;
  };
  std::unordered_set<WordVec, WordVecHash> seen;
  for (std::size_t j = 0; j < f.size(); ++j) seen.insert(signature(f, j, 0, true));
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (seen.count(signature(g, j, n, false))) return false;
  }
  return true;
}

Multiframe::Multiframe(std::size_t n) : n_(n) {
  frames_.push_back(StabilizerFrame::basis(BasisState(n)));
  stats_.num_qubits = n;
  record_peak();
}

Multiframe Multiframe::basis(const BasisState& bits) {
  Multiframe mf(bits.size());
  mf.frames_.clear();
  mf.frames_.push_back(StabilizerFrame::basis(bits));
  return mf;
}

std::size_t Multiframe::total_states() const {
  std::size_t s = 0;
  for (const StabilizerFrame& f : frames_) s += f.size();
  return s;
}

void Multiframe::record_peak() {
  stats_.max_frames = std::max(stats_.max_frames, frames_.size());
  stats_.max_states = std::max(stats_.max_states, total_states());
}

void Multiframe::apply_clifford(const CliffordOp& gate) {
  for (StabilizerFrame& f : frames_) f.rotate(gate);
}

void Multiframe::apply_nonclifford(const Gate& g) {
  for (StabilizerFrame& f : frames_) {
    switch (g.kind) {
      case GateKind::TOF:
        f.apply_toffoli(g.qubits[0], g.qubits[1], g.qubits[2]);
        break;
      case GateKind::CRZ:
        f.apply_controlled_phase(g.qubits[0], g.qubits[1], g.angle);
        break;
      case GateKind::T:
      case GateKind::TDG:
        f.apply_t(g.qubits[0], g.kind == GateKind::TDG);
        break;
      default:
        throw std::invalid_argument("not a non-Clifford gate");
    }
  }
  record_peak();
  if (coalescing_) coalesce_to_fixpoint();
  if (frames_.size() > 1 && !check_orthogonality()) {
    orthogonalize();
    if (coalescing_) coalesce_to_fixpoint();
  }
  record_peak();
}

void Multiframe::coalesce_to_fixpoint() {
  const std::size_t cap = 2 * n_ + 4;
  for (std::size_t round = 0;; ++round) {
    if (round > cap) {
      throw ContractViolation("coalescing did not reach a fixpoint");
    }
    const std::size_t states_before = total_states();
    std::vector<StabilizerFrame> next;
    for (StabilizerFrame& f : frames_) {
      if (f.size() < 2) {
        next.push_back(std::move(f));
        continue;
      }
      for (StabilizerFrame& part : coalesce_general(std::move(f))) {
        next.push_back(std::move(part));
      }
    }
    frames_ = std::move(next);
    const bool fused = total_states() < states_before;
    const std::size_t before_merge = frames_.size();
    merge_frames();
    const bool merged = frames_.size() < before_merge;
    if (!fused && !merged) break;
  }
}

void Multiframe::merge_frames() {
  if (frames_.size() < 2) return;
  for (StabilizerFrame& f : frames_) f.canonicalize();
  std::unordered_multimap<std::size_t, std::size_t> by_hash;
  std::vector<StabilizerFrame> out;
  std::vector<bool> touched;
  for (StabilizerFrame& f : frames_) {
    const std::size_t h = f.matrix().literal_hash();
    std::size_t target = out.size();
    const auto range = by_hash.equal_range(h);
    for (auto it = range.first; it != range.second; ++it) {
      if (out[it->second].matrix().same_literals(f.matrix())) {
        target = it->second;
        break;
      }
    }
    if (target == out.size()) {
      by_hash.emplace(h, target);
      out.push_back(std::move(f));
      touched.push_back(false);
      continue;
    }
    StabilizerFrame& dst = out[target];
    dst.reserve(dst.size() + f.size());
    for (std::size_t j = 0; j < f.size(); ++j) dst.add_entry(f.phase(j), f.amplitude(j));
    touched[target] = true;
  }
  frames_.clear();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (touched[i]) out[i].normalize_entries();
    if (!out[i].empty()) frames_.push_back(std::move(out[i]));
  }
}

bool Multiframe::check_orthogonality() const {
  const std::size_t count = frames_.size();
  if (count < 2) return true;

  // Literals shared by every frame. Entries whose signs differ on one of
  // them are orthogonal, so only frames sharing a projection need the
  // pairwise test.
  std::vector<std::unordered_map<WordVec, std::size_t, WordVecHash>> idx;
  idx.reserve(count);
  for (const StabilizerFrame& f : frames_) idx.push_back(literal_index(f.matrix()));
  std::vector<std::vector<std::size_t>> rows(count);
  for (const auto& [lit, r0] : idx[0]) {
    std::vector<std::size_t> at(count);
    at[0] = r0;
    bool everywhere = true;
    for (std::size_t k = 1; k < count && everywhere; ++k) {
      const auto it = idx[k].find(lit);
      everywhere = it != idx[k].end();
      if (everywhere) at[k] = it->second;
    }
    if (!everywhere) continue;
    for (std::size_t k = 0; k < count; ++k) rows[k].push_back(at[k]);
  }
  const std::size_t cw = words_for(rows[0].size());
  std::unordered_map<WordVec, std::vector<std::size_t>, WordVecHash> owners;
  std::set<std::pair<std::size_t, std::size_t>> suspects;
  for (std::size_t k = 0; k < count; ++k) {
    const StabilizerFrame& f = frames_[k];
    for (std::size_t j = 0; j < f.size(); ++j) {
      WordVec key(cw, 0);
      for (std::size_t c = 0; c < rows[k].size(); ++c) {
        if (test_bit(f.phase(j), rows[k][c])) set_bit(key, c, true);
      }
      std::vector<std::size_t>& who = owners[key];
      if (!who.empty() && who.back() == k) continue;
      for (std::size_t other : who) suspects.emplace(other, k);
      who.push_back(k);
    }
  }
  for (const auto& [a, b] : suspects) {
    if (!frames_orthogonal(frames_[a], frames_[b])) return false;
  }
  return true;
}

std::size_t Multiframe::pick_pivot() const {
  std::size_t fallback = n_;
  for (std::size_t q = 0; q < n_; ++q) {
    bool random = false;
    std::vector<unsigned> signature;
    for (const StabilizerFrame& f : frames_) {
      const StabilizerMatrix& m = f.matrix();
      random |= m.measure_kind(q).random;
      unsigned s = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        const unsigned lit = (test_bit(m.row_x(i), q) ? 2U : 0U) |
                             (test_bit(m.row_z(i), q) ? 1U : 0U);
        s |= 1U << lit;
      }
      signature.push_back(s);
    }
    if (!random) continue;
    if (fallback == n_) fallback = q;
    if (std::adjacent_find(signature.begin(), signature.end(),
                           std::not_equal_to<>()) != signature.end()) {
      return q;
    }
  }
  return fallback;
}

void Multiframe::orthogonalize() {
  while (frames_.size() > 1) {
    const std::size_t q = pick_pivot();
    if (q == n_) {
      merge_frames();
      if (frames_.size() > 1) {
        throw ContractViolation("frames without random qubits did not merge");
      }
      break;
    }
    for (StabilizerFrame& f : frames_) f.cofactor(q);
    merge_frames();
    record_peak();
  }
  ++stats_.orthogonalizations;
}

void Multiframe::split_on(std::size_t q) {
  if (q >= n_) throw QubitOutOfRange("measured qubit out of range");
  if (frames_.size() < 2) return;
  for (StabilizerFrame& f : frames_) f.cofactor(q);
  record_peak();
  merge_frames();
  if (frames_.size() > 1 && !check_orthogonality()) orthogonalize();
}

double Multiframe::probability_one(std::size_t q) const {
  if (q >= n_) throw QubitOutOfRange("measured qubit out of range");
  if (frames_.size() > 1) {
    Multiframe split = *this;
    split.split_on(q);
    double p = 0.0;
    for (const StabilizerFrame& f : split.frames_) p += f.probability_one(q);
    return p;
  }
  return frames_.empty() ? 0.0 : frames_.front().probability_one(q);
}

bool Multiframe::measure(std::size_t q, std::mt19937_64& rng) {
  return measure_with(q, std::uniform_real_distribution<double>(0.0, 1.0)(rng));
}

bool Multiframe::measure_with(std::size_t q, double u) {
  if (q >= n_) throw QubitOutOfRange("measured qubit out of range");
  split_on(q);
  double p1 = 0.0;
  for (const StabilizerFrame& f : frames_) p1 += f.probability_one(q);
  const double total = norm2();
  const double p0 = std::clamp((total - p1) / total, 0.0, 1.0);
  const bool x = !(u < p0);
  for (StabilizerFrame& f : frames_) f.restrict_outcome(q, x);
  std::erase_if(frames_, [](const StabilizerFrame& f) { return f.empty(); });
  record_peak();
  const double kept = norm2();
  if (kept <= 0.0) throw ContractViolation("measurement left an empty state");
  const double s = 1.0 / std::sqrt(kept);
  for (StabilizerFrame& f : frames_) f.scale(s);
  merge_frames();
  if (frames_.size() > 1 && !check_orthogonality()) orthogonalize();
  if (coalescing_) coalesce_to_fixpoint();
  record_peak();
  stats_.outcomes.push_back(x ? 1 : 0);
  return x;
}

void Multiframe::apply(const Gate& g, std::mt19937_64& rng) {
  switch (g.kind) {
    case GateKind::H:
    case GateKind::P:
    case GateKind::PDG:
    case GateKind::CNOT:
      ++stats_.gate_counts["clifford"];
      apply_clifford(g.clifford());
      break;
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
      ++stats_.gate_counts["pauli"];
      apply_clifford(g.clifford());
      break;
    case GateKind::TOF:
      ++stats_.gate_counts["toffoli"];
      apply_nonclifford(g);
      break;
    case GateKind::CRZ:
      ++stats_.gate_counts["crz"];
      apply_nonclifford(g);
      break;
    case GateKind::T:
    case GateKind::TDG:
      ++stats_.gate_counts["t"];
      apply_nonclifford(g);
      break;
    case GateKind::MEASURE:
      ++stats_.gate_counts["measure"];
      measure(g.qubits[0], rng);
      break;
  }
}

double Multiframe::norm2() const {
  double s = 0.0;
  for (const StabilizerFrame& f : frames_) s += f.norm2();
  return s;
}

std::vector<Amplitude> Multiframe::to_dense() const {
  std::vector<Amplitude> out(std::size_t{1} << n_, Amplitude{0.0, 0.0});
  for (const StabilizerFrame& f : frames_) f.accumulate_dense(out);
  return out;
}

Multiframe simulate(const Circuit& circuit, std::mt19937_64& rng,
                    const SimOptions& options) {
  circuit.validate();
  Multiframe mf(circuit.num_qubits);
  mf.set_coalescing(!options.single_frame);
  for (const Gate& g : circuit.gates) mf.apply(g, rng);
  return mf;
}

Circuit with_hadamards(const Circuit& circuit,
                       const std::vector<std::size_t>& qubits) {
  Circuit out;
  out.num_qubits = circuit.num_qubits;
  for (std::size_t q : qubits) out.add(make_gate(GateKind::H, q));
  out.gates.insert(out.gates.end(), circuit.gates.begin(), circuit.gates.end());
  return out;
}

}  // namespace framesim
