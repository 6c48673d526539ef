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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loggraph/bitio.hpp"
#include "loggraph/fine.hpp"
#include "loggraph/graph.hpp"
#include "loggraph/permute.hpp"

namespace loggraph {

enum class TransformKind : std::uint8_t { kFixed = 0, kVarintGap = 1, kVarintFull = 2, kBrb = 3 };

struct TransformScheme {
  TransformKind kind = TransformKind::kFixed;
  FineScheme fine;          // kFixed only
  unsigned brb_depth = 0;   // kBrb only

  bool varint() const { return kind == TransformKind::kVarintGap || kind == TransformKind::kVarintFull; }
  friend bool operator==(const TransformScheme&, const TransformScheme&) = default;
};

// Names: global, local, global-gap, local-gap, varint-gap, varint-full, brb.
// Weight modes of fixed schemes are set separately.
TransformScheme parse_adjacency_scheme(std::string_view name, unsigned brb_depth = 0);
std::string to_string(const TransformScheme& scheme);

// Varint codecs. Gap mode: zigzag(N_1 - v) then N_i - N_{i-1}.
// Throws EncodeError on an unsorted neighborhood.
void encode_varint_neighborhood(VertexId v, std::span<const VertexId> neighbors, bool gaps,
                                std::vector<std::uint8_t>& out);
void write_varint_neighborhood(BitWriter& out, VertexId v, std::span<const VertexId> neighbors,
                               bool gaps);
// Number of varints in a byte range: one terminal byte (MSB clear) per value.
// Padding bytes have the MSB set and are never counted.
std::uint64_t varint_count(const std::uint8_t* begin, const std::uint8_t* end);
std::vector<VertexId> decode_varint_neighborhood(std::span<const std::uint8_t> bytes, VertexId v,
                                                 bool gaps);

// Prefix-grouped neighborhoods over BRB labels. New id x belongs to the part
// p with part_start[p] <= x < part_start[p+1] and has suffix x - part_start[p].
// A group is laid out as (prefix: depth bits, count: varint in 8-bit chunks,
// count suffixes of suffix_width bits). A zero count marks trailing padding.
struct BrbCodec {
  unsigned depth = 1;
  unsigned suffix_width = 1;
  std::vector<std::uint64_t> part_start;

  static BrbCodec from_labels(const BrbLabels& labels);
  std::uint64_t prefix_of(VertexId id) const;
  std::uint64_t group_overhead_bits(std::uint64_t count) const {
    return depth + 8ull * varint_length(count);
  }

  void write(BinaryWriter& out) const;
  static BrbCodec read(BinaryReader& in);
};

struct BrbGroup {
  std::uint64_t prefix = 0;
  std::vector<std::uint64_t> suffixes;
};

std::vector<BrbGroup> brb_groups(std::span<const VertexId> neighbors, const BrbCodec& codec);
// Returns the bits written.
std::uint64_t write_brb_neighborhood(BitWriter& out, std::span<const VertexId> neighbors,
                                     const BrbCodec& codec);
std::vector<VertexId> decode_brb_neighborhood(const std::uint8_t* payload, std::uint64_t begin_bit,
                                              std::uint64_t end_bit, const BrbCodec& codec);

// Payload measurement of a (relabeled) graph under a scheme. `histogram`
// maps neighborhood payload size in bytes (rounded up) to a vertex count.
struct TransformMeasure {
  std::uint64_t payload_bits = 0;
  std::uint64_t header_bits = 0;          // fixed local modes
  std::uint64_t group_overhead_bits = 0;  // brb prefixes and counts
  std::map<std::uint64_t, std::uint64_t> histogram;
};

// `codec` is required for brb and ignored otherwise.
TransformMeasure measure(const AdjacencyGraph& g, const TransformScheme& scheme,
                         const BrbCodec* codec = nullptr);

}  // namespace loggraph
