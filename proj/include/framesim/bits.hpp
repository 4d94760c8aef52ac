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

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace framesim {

using Word = std::uint64_t;

constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

inline bool test_bit(std::span<const Word> w, std::size_t i) {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline void set_bit(std::span<Word> w, std::size_t i, bool v) {
  const Word mask = Word{1} << (i % kWordBits);
  if (v) {
    w[i / kWordBits] |= mask;
  } else {
    w[i / kWordBits] &= ~mask;
  }
}

inline void flip_bit(std::span<Word> w, std::size_t i) {
  w[i / kWordBits] ^= Word{1} << (i % kWordBits);
}

inline void xor_into(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] ^= src[k];
}

inline bool parity_of_and(std::span<const Word> a, std::span<const Word> b) {
  Word acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k) acc ^= a[k] & b[k];
  return std::popcount(acc) & 1;
}

inline bool all_zero(std::span<const Word> w) {
  return std::all_of(w.begin(), w.end(), [](Word x) { return x == 0; });
}

/// Index of the lowest set bit, or `limit` when none is set.
inline std::size_t first_set(std::span<const Word> w, std::size_t limit) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] != 0) {
      return std::min(limit, k * kWordBits + std::countr_zero(w[k]));
    }
  }
  return limit;
}

/**
 * Fixed-length bit string packed into 64-bit words.
 *
 * Serves both as a row-sign (phase) vector and as a computational-basis
 * label. Bit i lives in word i / 64 at position i % 64; unused high bits of
 * the last word are always zero so that word-wise comparison is exact.
 */
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size)
      : size_(size), words_(words_for(size), 0) {}

  /// Parses a string of '0'/'1' characters; character i is bit i.
  static BitVector from_string(const std::string& bits);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool operator[](std::size_t i) const { return test_bit(words_, i); }
  void set(std::size_t i, bool v) { set_bit(words_, i, v); }
  void flip(std::size_t i) { flip_bit(words_, i); }

  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  BitVector& operator^=(const BitVector& other) {
    xor_into(words_, other.words_);
    return *this;
  }

  bool any() const { return !all_zero(words_); }
  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }

  std::string to_string() const;

  bool operator==(const BitVector&) const = default;
  std::strong_ordering operator<=>(const BitVector& other) const {
    return words_ <=> other.words_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

using PhaseVector = BitVector;
using BasisState = BitVector;

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (Word w : v.words()) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace framesim
