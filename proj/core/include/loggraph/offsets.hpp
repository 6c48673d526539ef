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
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "loggraph/bitio.hpp"
#include "loggraph/bitvector.hpp"
#include "loggraph/serialize.hpp"

namespace loggraph {

enum class OffsetKind : std::uint8_t {
  kPtr32 = 0,
  kPtr64 = 1,
  kPtrLogn = 2,
  kBvPlain = 3,
  kBvInterleaved = 4,
  kBvSparse = 5,
};

std::string_view to_string(OffsetKind kind);
OffsetKind parse_offset_kind(std::string_view name);
inline bool is_bitvector(OffsetKind kind) { return kind >= OffsetKind::kBvPlain; }

struct OffsetSizeReport {
  std::uint64_t raw_bits = 0;      // offsets / bit-vector payload
  std::uint64_t aux_bits = 0;      // select/rank acceleration
  std::uint64_t side_bits = 0;     // nonempty-neighborhood index (bit vectors only)
  double formula_bits = 0;         // closed-form size of the structure
  std::uint64_t total_bits() const { return raw_bits + aux_bits + side_bits; }
};

// Array of n+1 absolute offsets, counted in payload units.
class OffsetArray {
 public:
  OffsetArray() = default;
  // `width_bits` of 0 selects the minimal width bits_for(entries.back()).
  OffsetArray(std::span<const std::uint64_t> entries, unsigned width_bits);

  std::uint64_t size() const { return entries_.size(); }
  std::uint64_t operator[](std::uint64_t i) const { return entries_.get(i); }
  unsigned width() const { return entries_.width(); }
  std::uint64_t bits() const { return entries_.bit_length(); }

  void write(BinaryWriter& out) const;
  static OffsetArray read(BinaryReader& in);

 private:
  PackedArray entries_;
};

enum class BitVectorFlavor : std::uint8_t { kPlain = 0, kInterleaved = 1, kSparse = 2 };

// Offset bit vector over a payload cut into blocks of `block_bits`: bit i is
// set iff some nonempty neighborhood starts at block i. A final sentinel bit
// marks the payload end so that every nonempty neighborhood is bracketed by
// two consecutive ones. The sparse flavor instead stores the start of every
// vertex as a multiset, so empty neighborhoods need no side index.
class OffsetBitVector {
 public:
  OffsetBitVector() = default;
  OffsetBitVector(std::span<const std::uint64_t> block_starts, std::uint64_t length,
                  BitVectorFlavor flavor, std::uint64_t interleave_period);

  BitVectorFlavor flavor() const { return static_cast<BitVectorFlavor>(bits_.index()); }
  std::uint64_t size() const;
  std::uint64_t count_ones() const;
  std::uint64_t rank(std::uint64_t x) const;
  std::uint64_t select(std::uint64_t j) const;
  std::pair<std::uint64_t, std::uint64_t> select_pair(std::uint64_t j) const;
  std::uint64_t raw_bits() const;
  std::uint64_t aux_bits() const;
  std::uint64_t interleave_period() const;

  void write(BinaryWriter& out) const;
  static OffsetBitVector read(BinaryReader& in);

 private:
  std::variant<PlainBitVector, InterleavedBitVector, SparseBitVector> bits_;
};

struct OffsetOptions {
  OffsetKind kind = OffsetKind::kPtr64;
  // Payload unit addressed by pointer arrays (entry width, 1 for bit offsets,
  // 8 for byte offsets).
  unsigned unit_bits = 1;
  // Block size B of bit-vector flavors.
  unsigned block_bits = 8;
  std::uint64_t interleave_period = InterleavedBitVector::kDefaultPeriod;
};

// The offset structure O: for each vertex the half-open bit range of its
// neighborhood in the payload.
class OffsetStructure {
 public:
  OffsetStructure() = default;
  // `starts` holds n+1 bit positions: starts[v] is where v's neighborhood
  // begins and starts[n] is the payload end. Throws CapacityError when a
  // pointer width cannot address the payload and ConfigError when a start
  // is not aligned to the unit / block size.
  OffsetStructure(std::span<const std::uint64_t> starts, const OffsetOptions& options);

  OffsetKind kind() const { return kind_; }
  std::uint64_t num_vertices() const { return n_; }
  unsigned unit_bits() const { return unit_bits_; }
  unsigned block_bits() const { return block_bits_; }

  // [begin, end) bit range of v's neighborhood. Empty neighborhoods of
  // bit-vector flavors resolve to the start of the next nonempty one.
  std::pair<std::uint64_t, std::uint64_t> bounds(VertexId v) const {
    if (v >= n_) throw_out_of_range(v);
    if (kind_ <= OffsetKind::kPtrLogn) {
      const auto& a = std::get<OffsetArray>(impl_);
      return {a[v] * unit_bits_, a[v + 1] * unit_bits_};
    }
    return bitvector_bounds(v);
  }
  std::uint64_t bit_offset(VertexId v) const { return bounds(v).first; }
  // Offset expressed in payload units (entries for fixed-width payloads).
  std::uint64_t offset_of(VertexId v) const { return bit_offset(v) / unit_bits_; }

  const OffsetBitVector* bitvector() const { return std::get_if<OffsetBitVector>(&impl_); }
  const OffsetArray* array() const { return std::get_if<OffsetArray>(&impl_); }

  OffsetSizeReport size_report() const;

  void write(BinaryWriter& out) const;
  static OffsetStructure read(BinaryReader& in);

 private:
  [[noreturn]] void throw_out_of_range(VertexId v) const;
  std::pair<std::uint64_t, std::uint64_t> bitvector_bounds(VertexId v) const;

  OffsetKind kind_ = OffsetKind::kPtr64;
  std::uint64_t n_ = 0;
  std::uint64_t payload_bits_ = 0;
  unsigned unit_bits_ = 1;
  unsigned block_bits_ = 8;
  std::variant<OffsetArray, OffsetBitVector> impl_;
  PlainBitVector nonempty_;  // bit-vector flavors only
};

}  // namespace loggraph
