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
#include <cstring>
#include <span>
#include <utility>
#include <vector>

#include "loggraph/types.hpp"

namespace loggraph {

// Zero bytes kept after every bit stream so that an unconditional 8-byte load
// at any valid bit position stays inside the buffer.
inline constexpr std::size_t kSlackBytes = 8;

// Minimum width that represents every value in [0, max_value]; never 0.
inline unsigned bits_for(std::uint64_t max_value) {
  if (max_value == 0) return 1;
  return 64u - static_cast<unsigned>(__builtin_clzll(max_value));
}

// ceil(log2(x)) with log2 of 0 and 1 both 0. This is the "formula" width used
// in size models, where a one-element universe costs nothing.
inline unsigned ceil_log2(std::uint64_t x) {
  if (x <= 1) return 0;
  return 64u - static_cast<unsigned>(__builtin_clzll(x - 1));
}

inline std::uint64_t low_mask(unsigned width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

inline std::uint64_t load_u64(const std::uint8_t* p) {
  std::uint64_t v;
  std::memcpy(&v, p, sizeof(v));
  return v;  // little-endian hosts only
}

// Extracts `width` bits starting at absolute bit `pos` of an LSB-first stream.
// One unaligned 64-bit load when the field fits in it (width <= 57 always
// does); a second load otherwise.
inline std::uint64_t read_bits(const std::uint8_t* base, std::uint64_t pos, unsigned width) {
  const std::uint8_t* address = base + (pos >> 3);
  const unsigned distance = static_cast<unsigned>(pos & 7);
  std::uint64_t value = load_u64(address) >> distance;
  if (distance + width > 64) {
    value |= load_u64(address + 8) << (64 - distance);
  }
  return value & low_mask(width);
}

// Append-only LSB-first bit stream backed by a byte buffer.
class BitWriter {
 public:
  void write(std::uint64_t value, unsigned width);
  void write_varint(std::uint64_t value);
  // Pads with `fill` bits up to the next multiple of `block_bits`.
  void align(unsigned block_bits, bool fill = false);
  std::uint64_t bit_length() const { return bits_; }
  // Releases the buffer, trimmed to whole bytes plus kSlackBytes of zeros.
  std::vector<std::uint8_t> finish() &&;

 private:
  std::vector<std::uint8_t> bytes_;
  std::uint64_t bits_ = 0;
};

// Fixed-width entries packed back to back: entry i occupies bits
// [i*width, (i+1)*width).
class PackedArray {
 public:
  PackedArray() = default;
  PackedArray(std::span<const std::uint64_t> values, unsigned width);

  static PackedArray from_bytes(std::vector<std::uint8_t> payload, unsigned width,
                                std::uint64_t count);

  std::uint64_t get(std::uint64_t i) const {
    return read_bits(payload_.data(), i * width_, width_);
  }
  std::uint64_t operator[](std::uint64_t i) const { return get(i); }

  unsigned width() const { return width_; }
  std::uint64_t size() const { return count_; }
  std::uint64_t bit_length() const { return count_ * width_; }
  const std::vector<std::uint8_t>& bytes() const { return payload_; }

 private:
  std::vector<std::uint8_t> payload_ = std::vector<std::uint8_t>(kSlackBytes, 0);
  unsigned width_ = 1;
  std::uint64_t count_ = 0;
};

// Canonical 7-bit little-endian group code.
void varint_encode(std::uint64_t value, std::vector<std::uint8_t>& out);
std::vector<std::uint8_t> varint_encode(std::uint64_t value);
// Returns (value, position after the last consumed byte).
std::pair<std::uint64_t, std::size_t> varint_decode(std::span<const std::uint8_t> bytes,
                                                    std::size_t pos);
inline unsigned varint_length(std::uint64_t value) { return (bits_for(value) + 6) / 7; }

inline std::uint64_t zigzag(std::int64_t k) {
  return (static_cast<std::uint64_t>(k) << 1) ^ static_cast<std::uint64_t>(k >> 63);
}
inline std::int64_t unzigzag(std::uint64_t z) {
  return static_cast<std::int64_t>(z >> 1) ^ -static_cast<std::int64_t>(z & 1);
}

// Sequential varint-stream of integers (count tracked alongside the bytes).
struct VarintStream {
  std::vector<std::uint8_t> payload;
  std::uint64_t count = 0;

  void push(std::uint64_t value) {
    varint_encode(value, payload);
    ++count;
  }
  std::vector<std::uint64_t> decode_all() const;
};

}  // namespace loggraph
