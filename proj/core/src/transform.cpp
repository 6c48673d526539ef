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

#include "loggraph/transform.hpp"

namespace loggraph {
namespace {

void check_sorted(std::span<const VertexId> neighbors) {
  for (std::size_t i = 1; i < neighbors.size(); ++i) {
    if (neighbors[i - 1] >= neighbors[i]) throw EncodeError("neighborhood must be strictly ascending");
  }
}

template <class Sink>
void emit_varints(VertexId v, std::span<const VertexId> neighbors, bool gaps, Sink&& sink) {
  check_sorted(neighbors);
  for (std::size_t i = 0; i < neighbors.size(); ++i) {
    if (!gaps) {
      sink(neighbors[i]);
    } else if (i == 0) {
      sink(zigzag(static_cast<std::int64_t>(neighbors[0]) - static_cast<std::int64_t>(v)));
    } else {
      sink(neighbors[i] - neighbors[i - 1]);
    }
  }
}

}  // namespace

TransformScheme parse_adjacency_scheme(std::string_view name, unsigned brb_depth) {
  TransformScheme s;
  if (name == "global" || name == "local" || name == "global-gap" || name == "local-gap") {
    s.kind = TransformKind::kFixed;
    s.fine.id_mode = name.starts_with("local") ? IdMode::kLocal : IdMode::kGlobal;
    s.fine.gap_mode = name.ends_with("-gap") ? GapMode::kFixedGap : GapMode::kAbsolute;
  } else if (name == "varint-gap") {
    s.kind = TransformKind::kVarintGap;
  } else if (name == "varint-full") {
    s.kind = TransformKind::kVarintFull;
  } else if (name == "brb") {
    if (brb_depth == 0) throw ConfigError("brb adjacency needs a prefix depth of at least 1");
    s.kind = TransformKind::kBrb;
    s.brb_depth = brb_depth;
  } else {
    throw ConfigError("unknown adjacency scheme '" + std::string(name) +
                      "' (expected global, local, global-gap, local-gap, varint-gap, varint-full, brb)");
  }
  return s;
}

std::string to_string(const TransformScheme& s) {
  switch (s.kind) {
    case TransformKind::kFixed: return to_string(s.fine);
    case TransformKind::kVarintGap: return "varint-gap";
    case TransformKind::kVarintFull: return "varint-full";
    case TransformKind::kBrb: return "brb" + std::to_string(s.brb_depth);
  }
  return "?";
}

void encode_varint_neighborhood(VertexId v, std::span<const VertexId> neighbors, bool gaps,
                                std::vector<std::uint8_t>& out) {
  emit_varints(v, neighbors, gaps, [&](std::uint64_t x) { varint_encode(x, out); });
}

void write_varint_neighborhood(BitWriter& out, VertexId v, std::span<const VertexId> neighbors,
                               bool gaps) {
  emit_varints(v, neighbors, gaps, [&](std::uint64_t x) { out.write_varint(x); });
}

std::uint64_t varint_count(const std::uint8_t* begin, const std::uint8_t* end) {
  std::uint64_t count = 0;
  for (const std::uint8_t* p = begin; p < end; ++p) count += (*p >> 7) ^ 1;
  return count;
}

std::vector<VertexId> decode_varint_neighborhood(std::span<const std::uint8_t> bytes, VertexId v,
                                                 bool gaps) {
  const std::uint64_t degree = varint_count(bytes.data(), bytes.data() + bytes.size());
  std::vector<VertexId> out;
  out.reserve(degree);
  std::size_t pos = 0;
  std::uint64_t prev = 0;
  for (std::uint64_t i = 0; i < degree; ++i) {
    auto [x, next] = varint_decode(bytes, pos);
    pos = next;
    std::uint64_t id = x;
    if (gaps) id = i == 0 ? static_cast<std::uint64_t>(static_cast<std::int64_t>(v) + unzigzag(x)) : prev + x;
    out.push_back(static_cast<VertexId>(id));
    prev = id;
  }
  return out;
}

BrbCodec BrbCodec::from_labels(const BrbLabels& labels) {
  BrbCodec codec;
  codec.depth = labels.depth;
  codec.suffix_width = labels.suffix_width;
  codec.part_start = labels.part_start;
  return codec;
}

std::uint64_t BrbCodec::prefix_of(VertexId id) const {
  auto it = std::upper_bound(part_start.begin(), part_start.end(), std::uint64_t{id});
  return static_cast<std::uint64_t>(it - part_start.begin()) - 1;
}

void BrbCodec::write(BinaryWriter& out) const {
  out.u32(depth);
  out.u32(suffix_width);
  out.u64(part_start.size());
  for (std::uint64_t s : part_start) out.u64(s);
}

BrbCodec BrbCodec::read(BinaryReader& in) {
  BrbCodec codec;
  codec.depth = in.u32();
  codec.suffix_width = in.u32();
  const std::uint64_t count = in.u64();
  if (codec.depth == 0 || codec.depth > 32 || codec.suffix_width == 0 || codec.suffix_width > 32 ||
      count != (std::uint64_t{1} << codec.depth) + 1 || count > in.remaining() / 8) {
    throw DecodeError("malformed brb codec");
  }
  codec.part_start.resize(count);
  for (auto& s : codec.part_start) s = in.u64();
  if (!std::is_sorted(codec.part_start.begin(), codec.part_start.end()) || codec.part_start[0] != 0) {
    throw DecodeError("malformed brb part table");
  }
  return codec;
}

std::vector<BrbGroup> brb_groups(std::span<const VertexId> neighbors, const BrbCodec& codec) {
  check_sorted(neighbors);
  std::vector<BrbGroup> groups;
  for (VertexId id : neighbors) {
    const std::uint64_t prefix = codec.prefix_of(id);
    if (groups.empty() || groups.back().prefix != prefix) groups.push_back({prefix, {}});
    groups.back().suffixes.push_back(id - codec.part_start[prefix]);
  }
  return groups;
}

std::uint64_t write_brb_neighborhood(BitWriter& out, std::span<const VertexId> neighbors,
                                     const BrbCodec& codec) {
  const std::uint64_t before = out.bit_length();
  for (const auto& group : brb_groups(neighbors, codec)) {
    out.write(group.prefix, codec.depth);
    out.write_varint(group.suffixes.size());
    for (std::uint64_t s : group.suffixes) out.write(s, codec.suffix_width);
  }
  return out.bit_length() - before;
}

std::vector<VertexId> decode_brb_neighborhood(const std::uint8_t* payload, std::uint64_t begin_bit,
                                              std::uint64_t end_bit, const BrbCodec& codec) {
  std::vector<VertexId> out;
  std::uint64_t pos = begin_bit;
  while (pos + codec.depth + 8 <= end_bit) {
    const std::uint64_t prefix = read_bits(payload, pos, codec.depth);
    pos += codec.depth;
    std::uint64_t count = 0;
    for (unsigned shift = 0;; shift += 7) {
      const std::uint64_t byte = read_bits(payload, pos, 8);
      pos += 8;
      count |= (byte & 0x7F) << shift;
      if (!(byte & 0x80)) break;
    }
    if (count == 0) break;
    const std::uint64_t base = codec.part_start[prefix];
    for (std::uint64_t i = 0; i < count; ++i) {
      out.push_back(static_cast<VertexId>(base + read_bits(payload, pos, codec.suffix_width)));
      pos += codec.suffix_width;
    }
  }
  return out;
}

TransformMeasure measure(const AdjacencyGraph& g, const TransformScheme& scheme,
                         const BrbCodec* codec) {
  TransformMeasure m;
  const std::uint64_t n = g.num_vertices();
  if (scheme.kind == TransformKind::kBrb && codec == nullptr) {
    throw ConfigError("brb measurement needs the prefix codec");
  }
  FineLayout layout;
  if (scheme.kind == TransformKind::kFixed) {
    layout = plan_fine_layout(g, scheme.fine);
    m.header_bits = n * (layout.id_header_bits + layout.weight_header_bits);
  }
  std::vector<std::uint8_t> bytes;
  for (VertexId v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v);
    std::uint64_t bits = 0;
    switch (scheme.kind) {
      case TransformKind::kFixed:
        bits = encode_neighborhood(v, nbrs, g.weights(v), layout).bits;
        break;
      case TransformKind::kVarintGap:
      case TransformKind::kVarintFull:
        bytes.clear();
        encode_varint_neighborhood(v, nbrs, scheme.kind == TransformKind::kVarintGap, bytes);
        bits = 8 * bytes.size();
        break;
      case TransformKind::kBrb:
        for (const auto& group : brb_groups(nbrs, *codec)) {
          const std::uint64_t overhead = codec->group_overhead_bits(group.suffixes.size());
          m.group_overhead_bits += overhead;
          bits += overhead + group.suffixes.size() * codec->suffix_width;
        }
        break;
    }
    m.payload_bits += bits;
    ++m.histogram[(bits + 7) / 8];
  }
  return m;
}

}  // namespace loggraph
