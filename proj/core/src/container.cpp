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

#include <cstring>
#include <fstream>
#include <iterator>

#include "loggraph/container.hpp"

namespace loggraph {
namespace {

constexpr std::uint32_t tag(const char (&s)[5]) {
  return static_cast<std::uint32_t>(s[0]) | static_cast<std::uint32_t>(s[1]) << 8 |
         static_cast<std::uint32_t>(s[2]) << 16 | static_cast<std::uint32_t>(s[3]) << 24;
}

constexpr std::uint32_t kTagOffsets = tag("OFFS");
constexpr std::uint32_t kTagNeighbors = tag("NBRS");
constexpr std::uint32_t kTagWeights = tag("WGTS");
constexpr std::uint32_t kTagLayout = tag("LAYT");
constexpr std::uint32_t kTagHeaders = tag("HDRS");
constexpr std::uint32_t kTagPayload = tag("PAYL");
constexpr std::uint32_t kTagPermutation = tag("PERM");
constexpr std::uint32_t kTagReport = tag("RPRT");

void write_header(BinaryWriter& out, const ContainerHeader& h) {
  out.bytes({reinterpret_cast<const std::uint8_t*>("LOGG"), 4});
  out.u16(h.version);
  out.u16(static_cast<std::uint16_t>(h.kind));
  out.u64(h.n);
  out.u64(h.m);
  out.u32(h.flags);
  out.u8(static_cast<std::uint8_t>(h.offsets));
  out.u8(static_cast<std::uint8_t>(h.adjacency.kind));
  out.u8(static_cast<std::uint8_t>(h.adjacency.fine.id_mode));
  out.u8(static_cast<std::uint8_t>(h.adjacency.fine.gap_mode));
  out.u8(static_cast<std::uint8_t>(h.adjacency.fine.weight_mode));
  out.u8(static_cast<std::uint8_t>(h.adjacency.brb_depth));
  out.u16(0);
  out.u32(h.block_bits);
  out.u32(h.max_weight);
}

ContainerHeader read_header(BinaryReader& in) {
  auto magic = in.bytes(4);
  if (std::memcmp(magic.data(), "LOGG", 4) != 0) throw DecodeError("not a loggraph container");
  ContainerHeader h;
  h.version = in.u16();
  if (h.version != kContainerVersion) {
    throw DecodeError("unsupported container version " + std::to_string(h.version));
  }
  const std::uint16_t kind = in.u16();
  if (kind != 1 && kind != 2) throw DecodeError("unknown container kind");
  h.kind = static_cast<ContainerKind>(kind);
  h.n = in.u64();
  h.m = in.u64();
  h.flags = in.u32();
  const std::uint8_t o = in.u8(), a = in.u8(), id = in.u8(), gap = in.u8(), w = in.u8();
  if (o > 5 || a > 3 || id > 1 || gap > 1 || w > 2) throw DecodeError("unknown scheme tag");
  h.offsets = static_cast<OffsetKind>(o);
  h.adjacency.kind = static_cast<TransformKind>(a);
  h.adjacency.fine.id_mode = static_cast<IdMode>(id);
  h.adjacency.fine.gap_mode = static_cast<GapMode>(gap);
  h.adjacency.fine.weight_mode = static_cast<WeightMode>(w);
  h.adjacency.brb_depth = in.u8();
  in.u16();
  h.block_bits = in.u32();
  h.max_weight = in.u32();
  return h;
}

void section(BinaryWriter& out, std::uint32_t t, const BinaryWriter& body) {
  out.u32(t);
  out.u64(body.size());
  out.bytes(body.data());
}

// Reads every section into (tag, bytes) pairs; unknown tags are rejected.
std::vector<std::pair<std::uint32_t, std::span<const std::uint8_t>>> read_sections(BinaryReader& in) {
  std::vector<std::pair<std::uint32_t, std::span<const std::uint8_t>>> out;
  while (!in.done()) {
    const std::uint32_t t = in.u32();
    const std::uint64_t length = in.u64();
    if (length > in.remaining()) throw DecodeError("section length exceeds input");
    out.emplace_back(t, in.bytes(length));
  }
  return out;
}

std::span<const std::uint8_t> find(const std::vector<std::pair<std::uint32_t, std::span<const std::uint8_t>>>& sections,
                                   std::uint32_t t, bool required = true) {
  for (const auto& [key, body] : sections) {
    if (key == t) return body;
  }
  if (required) throw DecodeError("missing container section");
  return {};
}

void expect_done(const BinaryReader& in) {
  if (!in.done()) throw DecodeError("trailing bytes in container section");
}

}  // namespace

// Serialization of CompressedGraph internals.
class ContainerCodec {
 public:
  static std::vector<std::uint8_t> encode(const CompressedGraph& g, const std::string& report) {
    ContainerHeader h;
    h.kind = ContainerKind::kCompressed;
    h.n = g.n_;
    h.m = g.m_;
    h.flags = (g.weighted_ ? ContainerFlag::kWeighted : 0) | (g.permutation_ ? ContainerFlag::kPermutation : 0) |
              (report.empty() ? 0 : ContainerFlag::kReport);
    h.offsets = g.offsets_.kind();
    h.adjacency = g.scheme_;
    h.block_bits = g.block_bits_;
    h.max_weight = g.max_weight_;

    BinaryWriter out;
    write_header(out, h);
    {
      BinaryWriter body;
      const FineLayout& l = g.layout_;
      body.u8(static_cast<std::uint8_t>(l.id_width));
      body.u8(static_cast<std::uint8_t>(l.first_width));
      body.u8(static_cast<std::uint8_t>(l.weight_width));
      body.u8(static_cast<std::uint8_t>(l.id_header_bits));
      body.u8(static_cast<std::uint8_t>(l.weight_header_bits));
      if (g.scheme_.kind == TransformKind::kBrb) g.brb_.write(body);
      section(out, kTagLayout, body);
    }
    if (g.layout_.id_header_bits || g.layout_.weight_header_bits) {
      BinaryWriter body;
      body.blob(g.id_headers_.bytes());
      body.blob(g.weight_headers_.bytes());
      section(out, kTagHeaders, body);
    }
    {
      BinaryWriter body;
      g.offsets_.write(body);
      section(out, kTagOffsets, body);
    }
    {
      BinaryWriter body;
      body.u64(g.payload_bits_);
      body.bytes(g.payload_);
      section(out, kTagPayload, body);
    }
    if (g.permutation_) {
      BinaryWriter body;
      g.permutation_->write(body);
      section(out, kTagPermutation, body);
    }
    if (!report.empty()) {
      BinaryWriter body;
      body.string(report);
      section(out, kTagReport, body);
    }
    return std::move(out).release();
  }

  static CompressedGraph decode(const ContainerHeader& h, BinaryReader& in, std::string& report) {
    const auto sections = read_sections(in);
    CompressedGraph g;
    g.n_ = h.n;
    g.m_ = h.m;
    g.weighted_ = h.flags & ContainerFlag::kWeighted;
    g.max_weight_ = h.max_weight;
    g.scheme_ = h.adjacency;
    g.block_bits_ = h.block_bits;
    if (g.scheme_.kind == TransformKind::kBrb && g.scheme_.brb_depth == 0) {
      throw DecodeError("brb container without prefix depth");
    }

    FineLayout& l = g.layout_;
    l.scheme = h.adjacency.fine;
    l.n = h.n;
    {
      BinaryReader body(find(sections, kTagLayout));
      l.id_width = body.u8();
      l.first_width = body.u8();
      l.weight_width = body.u8();
      l.id_header_bits = body.u8();
      l.weight_header_bits = body.u8();
      if (l.id_width == 0 || l.id_width > 64 || l.first_width == 0 || l.first_width > 64 ||
          l.weight_width > 32 || l.id_header_bits > 7 || l.weight_header_bits > 7) {
        throw DecodeError("malformed layout section");
      }
      if (g.scheme_.kind == TransformKind::kBrb) {
        g.brb_ = BrbCodec::read(body);
        if (g.brb_.depth != g.scheme_.brb_depth || g.brb_.part_start.back() != h.n) {
          throw DecodeError("brb codec inconsistent with header");
        }
      }
      expect_done(body);
    }
    if (l.id_header_bits || l.weight_header_bits) {
      BinaryReader body(find(sections, kTagHeaders));
      auto ids = body.blob();
      auto weights = body.blob();
      expect_done(body);
      auto packed = [&](std::vector<std::uint8_t> bytes, unsigned width) {
        if (width == 0) return PackedArray();
        if (bytes.size() < (h.n * width + 7) / 8 + kSlackBytes) throw DecodeError("header section too short");
        return PackedArray::from_bytes(std::move(bytes), width, h.n);
      };
      g.id_headers_ = packed(std::move(ids), l.id_header_bits);
      g.weight_headers_ = packed(std::move(weights), l.weight_header_bits);
    }
    {
      BinaryReader body(find(sections, kTagOffsets));
      g.offsets_ = OffsetStructure::read(body);
      expect_done(body);
      if (g.offsets_.num_vertices() != h.n || g.offsets_.kind() != h.offsets) {
        throw DecodeError("offset structure inconsistent with header");
      }
    }
    {
      BinaryReader body(find(sections, kTagPayload));
      g.payload_bits_ = body.u64();
      auto rest = body.bytes(body.remaining());
      if (rest.size() < (g.payload_bits_ + 7) / 8 + kSlackBytes) throw DecodeError("payload section too short");
      g.payload_.assign(rest.begin(), rest.end());
      if (g.offsets_.bounds(static_cast<VertexId>(h.n > 0 ? h.n - 1 : 0)).second > g.payload_bits_ && h.n > 0) {
        throw DecodeError("offsets point past the payload");
      }
    }
    if (h.flags & ContainerFlag::kPermutation) {
      BinaryReader body(find(sections, kTagPermutation));
      g.permutation_ = Permutation::read(body);
      expect_done(body);
      if (g.permutation_->size() != h.n) throw DecodeError("permutation size differs from n");
    }
    if (h.flags & ContainerFlag::kReport) {
      BinaryReader body(find(sections, kTagReport));
      report = body.string();
    }
    return g;
  }
};

std::vector<std::uint8_t> encode_container(const AdjacencyGraph& g) {
  ContainerHeader h;
  h.kind = ContainerKind::kAdjacency;
  h.n = g.num_vertices();
  h.m = g.num_edges();
  h.flags = g.weighted() ? ContainerFlag::kWeighted : 0;
  h.max_weight = g.max_weight();
  BinaryWriter out;
  write_header(out, h);
  {
    BinaryWriter body;
    for (EdgeIndex e : g.offsets()) body.u64(e);
    section(out, kTagOffsets, body);
  }
  {
    BinaryWriter body;
    for (VertexId u : g.neighbor_array()) body.u32(u);
    section(out, kTagNeighbors, body);
  }
  if (g.weighted()) {
    BinaryWriter body;
    for (Weight w : g.weight_array()) body.u32(w);
    section(out, kTagWeights, body);
  }
  return std::move(out).release();
}

std::vector<std::uint8_t> encode_container(const CompressedGraph& g, const std::string& report) {
  return ContainerCodec::encode(g, report);
}

Container decode_container(std::span<const std::uint8_t> bytes) {
  BinaryReader in(bytes);
  Container c;
  c.header = read_header(in);
  const ContainerHeader& h = c.header;
  if (h.kind == ContainerKind::kCompressed) {
    c.graph = ContainerCodec::decode(h, in, c.report);
    return c;
  }
  const auto sections = read_sections(in);
  auto offsets_raw = find(sections, kTagOffsets);
  auto neighbors_raw = find(sections, kTagNeighbors);
  if (offsets_raw.size() != 8 * (h.n + 1) || neighbors_raw.size() != 8 * h.m) {
    throw DecodeError("adjacency sections inconsistent with header");
  }
  std::vector<EdgeIndex> offsets(h.n + 1);
  std::memcpy(offsets.data(), offsets_raw.data(), offsets_raw.size());
  std::vector<VertexId> neighbors(2 * h.m);
  std::memcpy(neighbors.data(), neighbors_raw.data(), neighbors_raw.size());
  std::vector<Weight> weights;
  const bool weighted = h.flags & ContainerFlag::kWeighted;
  if (weighted) {
    auto weights_raw = find(sections, kTagWeights);
    if (weights_raw.size() != neighbors_raw.size()) throw DecodeError("weight section length mismatch");
    weights.resize(2 * h.m);
    std::memcpy(weights.data(), weights_raw.data(), weights_raw.size());
  }
  try {
    c.graph = AdjacencyGraph(std::move(offsets), std::move(neighbors), std::move(weights), weighted);
  } catch (const DomainError& e) {
    throw DecodeError(std::string("invalid graph in container: ") + e.what());
  }
  return c;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace loggraph
