// Copyright 2026 The loggraph Authors
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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "loggraph/serialize.hpp"
#include "loggraph/types.hpp"

namespace loggraph {

// Position of the (k+1)-th set bit of `word` (k is 0-based); `word` must have
// more than k set bits.
unsigned select_in_word(std::uint64_t word, unsigned k);

// Positions are 0-based throughout. rank(x) counts ones in [0, x] (inclusive);
// rank_before(x) counts ones in [0, x). select(j) is 1-based: the position of
// the j-th one.

// Plain bit vector: raw bits plus a cumulative-count directory every 512 bits
// and a position sample for every 512th one.
class PlainBitVector {
 public:
  static constexpr std::uint64_t kBlockBits = 512;
  static constexpr std::uint64_t kSelectSample = 512;

  PlainBitVector() : PlainBitVector({}, 0) {}
  PlainBitVector(std::vector<std::uint64_t> words, std::uint64_t length);
  static PlainBitVector from_positions(std::span<const std::uint64_t> positions,
                                       std::uint64_t length);

  std::uint64_t size() const { return length_; }
  std::uint64_t count_ones() const { return ones_; }
  bool operator[](std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  std::uint64_t rank_before(std::uint64_t x) const;
  std::uint64_t rank(std::uint64_t x) const;
  std::uint64_t select(std::uint64_t j) const;
  // Position of the j-th zero (1-based).
  std::uint64_t select0(std::uint64_t j) const;
  // First set bit at or after `pos`; size() when none.
  std::uint64_t next_one(std::uint64_t pos) const;

  std::uint64_t raw_bits() const { return length_; }
  std::uint64_t aux_bits() const { return 64 * (block_ranks_.size() + samples_.size()); }

  const std::vector<std::uint64_t>& words() const { return words_; }

  void write(BinaryWriter& out) const;
  static PlainBitVector read(BinaryReader& in);

 private:
  void build_index();

  std::vector<std::uint64_t> words_;
  std::uint64_t length_ = 0;
  std::uint64_t ones_ = 0;
  std::vector<std::uint64_t> block_ranks_;  // ones before each block, plus total
  std::vector<std::uint64_t> samples_;      // position of one #(k*kSelectSample + 1)
};

// Interleaved bit vector: every `period` data bits are preceded by an inline
// 64-bit count of the ones before them. select binary-searches the counts.
class InterleavedBitVector {
 public:
  static constexpr std::uint64_t kDefaultPeriod = 512;

  InterleavedBitVector() = default;
  InterleavedBitVector(std::span<const std::uint64_t> words, std::uint64_t length,
                       std::uint64_t period = kDefaultPeriod);

  std::uint64_t size() const { return length_; }
  std::uint64_t count_ones() const { return ones_; }
  std::uint64_t period() const { return period_; }
  bool operator[](std::uint64_t i) const;

  std::uint64_t rank_before(std::uint64_t x) const;
  std::uint64_t rank(std::uint64_t x) const { return rank_before(x + 1); }
  std::uint64_t select(std::uint64_t j) const;
  std::uint64_t next_one(std::uint64_t pos) const;

  std::uint64_t raw_bits() const { return length_; }
  std::uint64_t aux_bits() const { return 64 * num_blocks(); }

  void write(BinaryWriter& out) const;
  static InterleavedBitVector read(BinaryReader& in);

 private:
  std::uint64_t words_per_block() const { return period_ / 64; }
  std::uint64_t stride() const { return words_per_block() + 1; }
  std::uint64_t num_blocks() const { return (length_ + period_ - 1) / period_; }
  std::uint64_t data_word(std::uint64_t w) const {
    return storage_[(w / words_per_block()) * stride() + 1 + w % words_per_block()];
  }

  std::vector<std::uint64_t> storage_;
  std::uint64_t length_ = 0;
  std::uint64_t ones_ = 0;
  std::uint64_t period_ = kDefaultPeriod;
};

// Sparse bit vector: Elias-Fano coding of the ascending one positions. Low
// parts of width floor(log2(length/ones)) are packed; high parts are stored
// as unary bucket counts in a PlainBitVector. With `repeats` the positions
// may form a nondecreasing multiset; select and rank then count copies.
class SparseBitVector {
 public:
  SparseBitVector() = default;
  SparseBitVector(std::span<const std::uint64_t> positions, std::uint64_t length, bool repeats = false);

  std::uint64_t size() const { return length_; }
  std::uint64_t count_ones() const { return ones_; }
  unsigned low_width() const { return low_width_; }
  bool operator[](std::uint64_t i) const { return rank(i) - rank_before(i) == 1; }

  std::uint64_t rank_before(std::uint64_t x) const;
  std::uint64_t rank(std::uint64_t x) const { return rank_before(x + 1); }
  std::uint64_t select(std::uint64_t j) const;
  // (select(j), select(j + 1)) sharing the high-part scan.
  std::pair<std::uint64_t, std::uint64_t> select_pair(std::uint64_t j) const;

  std::uint64_t raw_bits() const { return ones_ * low_width_ + high_.raw_bits(); }
  std::uint64_t aux_bits() const { return high_.aux_bits(); }

  void write(BinaryWriter& out) const;
  static SparseBitVector read(BinaryReader& in);

 private:
  std::uint64_t low(std::uint64_t i) const;

  std::vector<std::uint64_t> low_words_;
  PlainBitVector high_;
  std::uint64_t length_ = 0;
  std::uint64_t ones_ = 0;
  unsigned low_width_ = 0;
};

}  // namespace loggraph
