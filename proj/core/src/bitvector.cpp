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

#include <algorithm>
#include <array>
#include <bit>

#include "loggraph/bitvector.hpp"

namespace loggraph {
namespace {

// kSelectInByte[b][k]: position of the (k+1)-th set bit of byte b (8 if none).
constexpr auto kSelectInByte = [] {
  std::array<std::array<std::uint8_t, 8>, 256> table{};
  for (unsigned b = 0; b < 256; ++b) {
    unsigned k = 0;
    for (unsigned i = 0; i < 8; ++i) table[b][i] = 8;
    for (unsigned i = 0; i < 8; ++i) {
      if ((b >> i) & 1) table[b][k++] = static_cast<std::uint8_t>(i);
    }
  }
  return table;
}();

std::uint64_t popcount(std::uint64_t w) { return static_cast<std::uint64_t>(std::popcount(w)); }

[[noreturn, gnu::noinline, gnu::cold]] void throw_select(std::uint64_t j, std::uint64_t ones) {
  throw DomainError("select index " + std::to_string(j) + " outside [1, " + std::to_string(ones) + "]");
}

[[noreturn, gnu::noinline, gnu::cold]] void throw_rank(std::uint64_t x, std::uint64_t length) {
  throw DomainError("rank position " + std::to_string(x) + " outside [0, " + std::to_string(length) + ")");
}

inline void check_select(std::uint64_t j, std::uint64_t ones) {
  if (j == 0 || j > ones) [[unlikely]] throw_select(j, ones);
}

inline void check_rank(std::uint64_t x, std::uint64_t length) {
  if (x >= length) [[unlikely]] throw_rank(x, length);
}

std::vector<std::uint64_t> words_from_positions(std::span<const std::uint64_t> positions,
                                                std::uint64_t length) {
  std::vector<std::uint64_t> words((length + 63) / 64, 0);
  std::uint64_t prev = 0;
  bool first = true;
  for (std::uint64_t p : positions) {
    if (p >= length) throw DomainError("bit position beyond vector length");
    if (!first && p <= prev) throw DomainError("bit positions must be strictly ascending");
    words[p >> 6] |= std::uint64_t{1} << (p & 63);
    prev = p;
    first = false;
  }
  return words;
}

}  // namespace

// Broadword select: per-byte prefix counts locate the byte, a table the bit.
unsigned select_in_word(std::uint64_t word, unsigned k) {
  constexpr std::uint64_t kOnes = 0x0101010101010101ull;
  constexpr std::uint64_t kHigh = 0x8080808080808080ull;
  std::uint64_t s = word - ((word >> 1) & 0x5555555555555555ull);
  s = (s & 0x3333333333333333ull) + ((s >> 2) & 0x3333333333333333ull);
  s = (s + (s >> 4)) & 0x0F0F0F0F0F0F0F0Full;
  const std::uint64_t byte_sums = s * kOnes;
  const std::uint64_t below = ((k * kOnes | kHigh) - byte_sums) & kHigh;
  const unsigned place = static_cast<unsigned>(std::popcount(below)) * 8;
  const unsigned prior = place == 0 ? 0 : static_cast<unsigned>((byte_sums >> (place - 8)) & 0xFF);
  return place + kSelectInByte[(word >> place) & 0xFF][k - prior];
}

// ---------------------------------------------------------------------------
// PlainBitVector

PlainBitVector::PlainBitVector(std::vector<std::uint64_t> words, std::uint64_t length)
    : words_(std::move(words)), length_(length) {
  words_.resize((length_ + 63) / 64, 0);
  if (length_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (length_ % 64)) - 1;
  build_index();
}

PlainBitVector PlainBitVector::from_positions(std::span<const std::uint64_t> positions,
                                              std::uint64_t length) {
  return PlainBitVector(words_from_positions(positions, length), length);
}

void PlainBitVector::build_index() {
  const std::uint64_t words_per_block = kBlockBits / 64;
  const std::uint64_t blocks = (length_ + kBlockBits - 1) / kBlockBits;
  block_ranks_.assign(blocks + 1, 0);
  samples_.clear();
  std::uint64_t ones = 0;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    block_ranks_[b] = ones;
    const std::uint64_t end = std::min<std::uint64_t>((b + 1) * words_per_block, words_.size());
    for (std::uint64_t w = b * words_per_block; w < end; ++w) {
      std::uint64_t word = words_[w];
      const std::uint64_t count = popcount(word);
      // Sample every kSelectSample-th one: ones numbered 1, 513, 1025, ...
      std::uint64_t next_sample = samples_.size() * kSelectSample + 1;
      while (next_sample <= ones + count) {
        samples_.push_back(w * 64 + select_in_word(word, static_cast<unsigned>(next_sample - ones - 1)));
        next_sample += kSelectSample;
      }
      ones += count;
    }
  }
  block_ranks_[blocks] = ones;
  ones_ = ones;
}

std::uint64_t PlainBitVector::rank_before(std::uint64_t x) const {
  if (x > length_) throw DomainError("rank position beyond vector length");
  const std::uint64_t block = x / kBlockBits;
  std::uint64_t r = block_ranks_[block];
  const std::uint64_t last_word = x >> 6;
  for (std::uint64_t w = block * (kBlockBits / 64); w < last_word; ++w) r += popcount(words_[w]);
  if (x & 63) r += popcount(words_[last_word] & ((std::uint64_t{1} << (x & 63)) - 1));
  return r;
}

std::uint64_t PlainBitVector::rank(std::uint64_t x) const {
  check_rank(x, length_);
  return rank_before(x + 1);
}

std::uint64_t PlainBitVector::select(std::uint64_t j) const {
  check_select(j, ones_);
  const std::uint64_t s = (j - 1) / kSelectSample;
  std::uint64_t lo = samples_[s] / kBlockBits;
  std::uint64_t hi = s + 1 < samples_.size() ? samples_[s + 1] / kBlockBits
                                             : block_ranks_.size() - 2;
  // Largest block whose preceding count is < j.
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (block_ranks_[mid] < j) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  std::uint64_t remaining = j - block_ranks_[lo];
  for (std::uint64_t w = lo * (kBlockBits / 64);; ++w) {
    const std::uint64_t count = popcount(words_[w]);
    if (remaining <= count) {
      return w * 64 + select_in_word(words_[w], static_cast<unsigned>(remaining - 1));
    }
    remaining -= count;
  }
}

std::uint64_t PlainBitVector::select0(std::uint64_t j) const {
  const std::uint64_t zeros = length_ - ones_;
  if (j == 0 || j > zeros) {
    throw DomainError("select0 index " + std::to_string(j) + " outside [1, " +
                      std::to_string(zeros) + "]");
  }
  auto zeros_before = [&](std::uint64_t b) { return b * kBlockBits - block_ranks_[b]; };
  std::uint64_t lo = 0;
  std::uint64_t hi = block_ranks_.size() - 2;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (zeros_before(mid) < j) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  std::uint64_t remaining = j - zeros_before(lo);
  for (std::uint64_t w = lo * (kBlockBits / 64);; ++w) {
    const std::uint64_t inverted = ~words_[w];
    const std::uint64_t count = popcount(inverted);
    if (remaining <= count) {
      return w * 64 + select_in_word(inverted, static_cast<unsigned>(remaining - 1));
    }
    remaining -= count;
  }
}

std::uint64_t PlainBitVector::next_one(std::uint64_t pos) const {
  if (pos >= length_) return length_;
  std::uint64_t w = pos >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (pos & 63));
  while (word == 0) {
    if (++w >= words_.size()) return length_;
    word = words_[w];
  }
  return w * 64 + static_cast<std::uint64_t>(std::countr_zero(word));
}

void PlainBitVector::write(BinaryWriter& out) const {
  out.u64(length_);
  out.words(words_);
  out.words(block_ranks_);
  out.words(samples_);
}

PlainBitVector PlainBitVector::read(BinaryReader& in) {
  PlainBitVector bv;
  bv.length_ = in.u64();
  bv.words_ = in.words();
  bv.block_ranks_ = in.words();
  bv.samples_ = in.words();
  const std::uint64_t blocks = (bv.length_ + kBlockBits - 1) / kBlockBits;
  if (bv.words_.size() != (bv.length_ + 63) / 64 || bv.block_ranks_.size() != blocks + 1) {
    throw DecodeError("corrupt plain bit vector");
  }
  bv.ones_ = bv.block_ranks_.back();
  if (bv.samples_.size() != (bv.ones_ + kSelectSample - 1) / kSelectSample) {
    throw DecodeError("corrupt plain bit vector select samples");
  }
  return bv;
}

// ---------------------------------------------------------------------------
// InterleavedBitVector

InterleavedBitVector::InterleavedBitVector(std::span<const std::uint64_t> words,
                                           std::uint64_t length, std::uint64_t period)
    : length_(length), period_(period) {
  if (period == 0 || period % 64 != 0) throw ConfigError("interleave period must be a multiple of 64");
  const std::uint64_t blocks = num_blocks();
  storage_.assign(blocks * stride(), 0);
  std::uint64_t ones = 0;
  const std::uint64_t total_words = (length + 63) / 64;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    storage_[b * stride()] = ones;
    for (std::uint64_t i = 0; i < words_per_block(); ++i) {
      const std::uint64_t w = b * words_per_block() + i;
      if (w >= total_words) break;
      std::uint64_t word = w < words.size() ? words[w] : 0;
      if (w + 1 == total_words && length % 64 != 0) word &= (std::uint64_t{1} << (length % 64)) - 1;
      storage_[b * stride() + 1 + i] = word;
      ones += popcount(word);
    }
  }
  ones_ = ones;
}

bool InterleavedBitVector::operator[](std::uint64_t i) const {
  return (data_word(i >> 6) >> (i & 63)) & 1;
}

std::uint64_t InterleavedBitVector::rank_before(std::uint64_t x) const {
  if (x > length_) throw DomainError("rank position beyond vector length");
  const std::uint64_t block = x / period_;
  if (block >= num_blocks()) return ones_;
  const std::uint64_t* base = storage_.data() + block * stride();
  std::uint64_t r = base[0];
  const std::uint64_t in_block = x % period_;
  for (std::uint64_t i = 0; i < in_block / 64; ++i) r += popcount(base[1 + i]);
  if (in_block & 63) r += popcount(base[1 + in_block / 64] & ((std::uint64_t{1} << (in_block & 63)) - 1));
  return r;
}

std::uint64_t InterleavedBitVector::select(std::uint64_t j) const {
  check_select(j, ones_);
  std::uint64_t lo = 0;
  std::uint64_t hi = num_blocks() - 1;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (storage_[mid * stride()] < j) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const std::uint64_t* base = storage_.data() + lo * stride();
  std::uint64_t remaining = j - base[0];
  for (std::uint64_t i = 0;; ++i) {
    const std::uint64_t count = popcount(base[1 + i]);
    if (remaining <= count) {
      return lo * period_ + i * 64 + select_in_word(base[1 + i], static_cast<unsigned>(remaining - 1));
    }
    remaining -= count;
  }
}

std::uint64_t InterleavedBitVector::next_one(std::uint64_t pos) const {
  if (pos >= length_) return length_;
  const std::uint64_t total_words = (length_ + 63) / 64;
  std::uint64_t w = pos >> 6;
  std::uint64_t word = data_word(w) & (~std::uint64_t{0} << (pos & 63));
  while (word == 0) {
    if (++w >= total_words) return length_;
    word = data_word(w);
  }
  return w * 64 + static_cast<std::uint64_t>(std::countr_zero(word));
}

void InterleavedBitVector::write(BinaryWriter& out) const {
  out.u64(length_);
  out.u64(period_);
  out.words(storage_);
}

InterleavedBitVector InterleavedBitVector::read(BinaryReader& in) {
  InterleavedBitVector bv;
  bv.length_ = in.u64();
  bv.period_ = in.u64();
  if (bv.period_ == 0 || bv.period_ % 64 != 0) throw DecodeError("corrupt interleave period");
  bv.storage_ = in.words();
  if (bv.storage_.size() != bv.num_blocks() * bv.stride()) {
    throw DecodeError("corrupt interleaved bit vector");
  }
  bv.ones_ = 0;
  if (bv.num_blocks() > 0) {
    const std::uint64_t* last = bv.storage_.data() + (bv.num_blocks() - 1) * bv.stride();
    bv.ones_ = last[0];
    for (std::uint64_t i = 0; i < bv.words_per_block(); ++i) bv.ones_ += popcount(last[1 + i]);
  }
  return bv;
}

// ---------------------------------------------------------------------------
// SparseBitVector

SparseBitVector::SparseBitVector(std::span<const std::uint64_t> positions, std::uint64_t length,
                                 bool repeats)
    : length_(length), ones_(positions.size()) {
  if (ones_ > 0 && length_ / ones_ >= 2) {
    low_width_ = static_cast<unsigned>(std::bit_width(length_ / ones_) - 1);
  }
  const std::uint64_t high_length = ones_ + (length_ >> low_width_) + 1;
  std::vector<std::uint64_t> high_words((high_length + 63) / 64, 0);
  low_words_.assign((ones_ * low_width_ + 63) / 64 + 1, 0);
  const std::uint64_t mask = (std::uint64_t{1} << low_width_) - 1;
  for (std::uint64_t i = 0; i < ones_; ++i) {
    const std::uint64_t p = positions[i];
    if (p >= length_) throw DomainError("bit position beyond vector length");
    if (i > 0 && (repeats ? p < positions[i - 1] : p <= positions[i - 1])) {
      throw DomainError(repeats ? "positions must be nondecreasing" : "bit positions must be strictly ascending");
    }
    if (low_width_ > 0) {
      const std::uint64_t bit = i * low_width_;
      const std::uint64_t value = p & mask;
      low_words_[bit >> 6] |= value << (bit & 63);
      if ((bit & 63) + low_width_ > 64) low_words_[(bit >> 6) + 1] |= value >> (64 - (bit & 63));
    }
    const std::uint64_t h = (p >> low_width_) + i;
    high_words[h >> 6] |= std::uint64_t{1} << (h & 63);
  }
  high_ = PlainBitVector(std::move(high_words), high_length);
}

std::uint64_t SparseBitVector::low(std::uint64_t i) const {
  if (low_width_ == 0) return 0;
  const std::uint64_t bit = i * low_width_;
  std::uint64_t value = low_words_[bit >> 6] >> (bit & 63);
  if ((bit & 63) + low_width_ > 64) value |= low_words_[(bit >> 6) + 1] << (64 - (bit & 63));
  return value & ((std::uint64_t{1} << low_width_) - 1);
}

std::uint64_t SparseBitVector::select(std::uint64_t j) const {
  check_select(j, ones_);
  const std::uint64_t i = j - 1;
  return ((high_.select(j) - i) << low_width_) | low(i);
}

std::pair<std::uint64_t, std::uint64_t> SparseBitVector::select_pair(std::uint64_t j) const {
  check_select(j, ones_);
  check_select(j + 1, ones_);
  const std::uint64_t i = j - 1;
  const std::uint64_t h1 = high_.select(j);
  const std::uint64_t h2 = high_.next_one(h1 + 1);
  return {((h1 - i) << low_width_) | low(i), ((h2 - i - 1) << low_width_) | low(i + 1)};
}

std::uint64_t SparseBitVector::rank_before(std::uint64_t x) const {
  if (x > length_) throw DomainError("rank position beyond vector length");
  if (x == length_) return ones_;
  if (ones_ == 0) return 0;
  const std::uint64_t h = x >> low_width_;
  const std::uint64_t target = x & ((std::uint64_t{1} << low_width_) - 1);
  std::uint64_t i = 0;
  std::uint64_t pos = 0;
  if (h > 0) {
    const std::uint64_t p = high_.select0(h);
    i = p - h + 1;
    pos = p + 1;
  }
  while (pos < high_.size() && high_[pos] && low(i) < target) {
    ++i;
    ++pos;
  }
  return i;
}

void SparseBitVector::write(BinaryWriter& out) const {
  out.u64(length_);
  out.u64(ones_);
  out.u8(static_cast<std::uint8_t>(low_width_));
  out.words(low_words_);
  high_.write(out);
}

SparseBitVector SparseBitVector::read(BinaryReader& in) {
  SparseBitVector bv;
  bv.length_ = in.u64();
  bv.ones_ = in.u64();
  bv.low_width_ = in.u8();
  if (bv.low_width_ > 63) throw DecodeError("corrupt sparse bit vector low width");
  bv.low_words_ = in.words();
  bv.high_ = PlainBitVector::read(in);
  if (bv.low_words_.size() != (bv.ones_ * bv.low_width_ + 63) / 64 + 1 ||
      bv.high_.count_ones() != bv.ones_ ||
      bv.high_.size() != bv.ones_ + (bv.length_ >> bv.low_width_) + 1) {
    throw DecodeError("corrupt sparse bit vector");
  }
  return bv;
}

}  // namespace loggraph
