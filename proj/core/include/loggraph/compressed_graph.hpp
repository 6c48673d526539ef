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
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "loggraph/bitio.hpp"
#include "loggraph/fine.hpp"
#include "loggraph/graph.hpp"
#include "loggraph/offsets.hpp"
#include "loggraph/permute.hpp"
#include "loggraph/transform.hpp"

namespace loggraph {

enum class PermuterKind : std::uint8_t { kIdentity = 0, kDegreeMin = 1, kGreedy = 2, kRb = 3, kBrb = 4 };

std::string_view to_string(PermuterKind kind);
PermuterKind parse_permuter(std::string_view name);

struct BuildOptions {
  OffsetKind offsets = OffsetKind::kPtr64;
  TransformScheme adjacency;
  PermuterKind permuter = PermuterKind::kIdentity;
  unsigned block_bits = 0;  // bit-vector offsets; 0 picks the scheme default
  std::uint64_t interleave_period = InterleavedBitVector::kDefaultPeriod;
  unsigned brb_depth = 0;   // brb permuter; 0 falls back to adjacency.brb_depth
  double imbalance = 0.001;
  std::uint64_t seed = 1;
};

// Valid (offsets, adjacency, permuter) combinations as printable text.
std::string compatibility_matrix();
// Throws ConfigError (message ends with the matrix) for an invalid pair.
void check_compatibility(const BuildOptions& options);

// Itemized storage. The four components sum to the serialized container size
// (embedded report excluded); metadata absorbs framing, layout parameters,
// byte rounding and the permutation.
struct SizeReport {
  std::uint64_t offsets_bits = 0;
  std::uint64_t payload_bits = 0;
  std::uint64_t headers_bits = 0;
  std::uint64_t metadata_bits = 0;

  OffsetSizeReport offsets;           // breakdown of offsets_bits
  std::uint64_t permutation_bits = 0; // part of metadata_bits
  std::uint64_t group_overhead_bits = 0;  // brb prefixes and counts, part of payload_bits
  std::uint64_t csr_baseline_bits = 0;    // ptr32 offsets + 32-bit ids (+ 32-bit weights)

  std::uint64_t structure_bits() const { return offsets_bits + payload_bits + headers_bits; }
  std::uint64_t total_bits() const { return structure_bits() + metadata_bits; }
  // component,bits rows.
  std::string csv() const;
};

class CompressedGraph {
 public:
  CompressedGraph() = default;
  static CompressedGraph build(const AdjacencyGraph& g, const BuildOptions& options);

  std::uint64_t num_vertices() const { return n_; }
  std::uint64_t num_edges() const { return m_; }
  bool weighted() const { return weighted_; }
  Weight max_weight() const { return max_weight_; }
  OffsetKind offset_kind() const { return offsets_.kind(); }
  const TransformScheme& scheme() const { return scheme_; }
  unsigned block_bits() const { return block_bits_; }
  const OffsetStructure& offsets() const { return offsets_; }
  const FineLayout& layout() const { return layout_; }
  const std::optional<Permutation>& permutation() const { return permutation_; }
  std::uint64_t payload_bits() const { return payload_bits_; }

  std::uint64_t degree(VertexId v) const;
  VertexId neighbor(VertexId v, std::uint64_t i) const;
  std::vector<VertexId> neighbors(VertexId v) const;
  std::vector<Weight> weights(VertexId v) const;
  // Fully decoded copy in the stored labeling.
  AdjacencyGraph decode() const;
  SizeReport size_report() const;

  // One offset resolution, then sequential decoding. The callback may return
  // bool; false stops the scan.
  template <class F>
  void for_each_neighbor(VertexId v, F&& f) const {
    scan(v, [&](VertexId u, Weight) { return invoke_continue(f, u); });
  }
  template <class F>
  void for_each_weighted_neighbor(VertexId v, F&& f) const {
    scan(v, [&](VertexId u, Weight w) {
      f(u, w);
      return true;
    });
  }

 private:
  friend class ContainerCodec;

  template <class F>
  static bool invoke_continue(F& f, VertexId u) {
    if constexpr (std::is_same_v<std::invoke_result_t<F&, VertexId>, bool>) {
      return f(u);
    } else {
      f(u);
      return true;
    }
  }

  void check(VertexId v) const;
  NeighborhoodHeader header(VertexId v) const {
    NeighborhoodHeader h;
    if (layout_.id_header_bits) h.id_width = static_cast<unsigned>(id_headers_.get(v)) + 1;
    if (layout_.weight_header_bits) h.weight_width = static_cast<unsigned>(weight_headers_.get(v)) + 1;
    return h;
  }

  template <class F>
  void scan(VertexId v, F&& f) const;

  std::uint64_t n_ = 0;
  std::uint64_t m_ = 0;
  bool weighted_ = false;
  Weight max_weight_ = 0;
  TransformScheme scheme_;
  unsigned block_bits_ = 0;
  FineLayout layout_;
  BrbCodec brb_;
  PackedArray id_headers_;
  PackedArray weight_headers_;
  std::vector<std::uint8_t> payload_ = std::vector<std::uint8_t>(kSlackBytes, 0);
  std::uint64_t payload_bits_ = 0;
  OffsetStructure offsets_;
  std::optional<Permutation> permutation_;
};

template <class F>
void CompressedGraph::scan(VertexId v, F&& f) const {
  check(v);
  const auto [begin, end] = offsets_.bounds(v);
  if (begin == end) return;
  const std::uint8_t* base = payload_.data();
  switch (scheme_.kind) {
    case TransformKind::kVarintGap:
    case TransformKind::kVarintFull: {
      const bool gaps = scheme_.kind == TransformKind::kVarintGap;
      const std::uint8_t* p = base + begin / 8;
      const std::uint8_t* stop = base + end / 8;
      std::uint64_t prev = 0;
      bool first = true;
      while (p < stop) {
        std::uint64_t x = *p & 0x7F;
        unsigned shift = 7;
        std::uint8_t byte = *p++;
        while ((byte & 0x80) && p < stop) {
          byte = *p++;
          x |= static_cast<std::uint64_t>(byte & 0x7F) << shift;
          shift += 7;
        }
        if (byte & 0x80) return;  // block padding
        std::uint64_t id = x;
        if (gaps) {
          id = first ? static_cast<std::uint64_t>(static_cast<std::int64_t>(v) + unzigzag(x)) : prev + x;
        }
        first = false;
        prev = id;
        if (!f(static_cast<VertexId>(id), Weight{1})) return;
      }
      return;
    }
    case TransformKind::kFixed: {
      const NeighborhoodHeader h = header(v);
      const FineScheme& s = layout_.scheme;
      const unsigned wb = s.weight_mode == WeightMode::kNone ? 0
                          : s.weight_mode == WeightMode::kGlobal ? layout_.weight_width
                                                                 : h.weight_width;
      const unsigned rest = s.local_ids() ? h.id_width : layout_.id_width;
      unsigned width = s.local_ids() && s.gaps() ? layout_.first_width : rest;
      std::uint64_t pos = begin;
      std::uint64_t prev = 0;
      bool first = true;
      while (pos < end) {
        const std::uint64_t raw = read_bits(base, pos, width);
        pos += width;
        std::uint64_t id = raw;
        if (s.gaps()) {
          id = first ? static_cast<std::uint64_t>(static_cast<std::int64_t>(v) + unzigzag(raw)) : prev + raw;
        }
        Weight w = 1;
        if (wb) {
          w = static_cast<Weight>(read_bits(base, pos, wb));
          pos += wb;
        }
        first = false;
        prev = id;
        width = rest;
        if (!f(static_cast<VertexId>(id), w)) return;
      }
      return;
    }
    case TransformKind::kBrb: {
      const unsigned k = brb_.depth;
      const unsigned sw = brb_.suffix_width;
      std::uint64_t pos = begin;
      while (pos + k + 8 <= end) {
        const std::uint64_t prefix = read_bits(base, pos, k);
        pos += k;
        std::uint64_t count = 0;
        for (unsigned shift = 0;; shift += 7) {
          const std::uint64_t byte = read_bits(base, pos, 8);
          pos += 8;
          count |= (byte & 0x7F) << shift;
          if (!(byte & 0x80)) break;
        }
        if (count == 0) return;
        const std::uint64_t part = brb_.part_start[prefix];
        for (std::uint64_t i = 0; i < count; ++i, pos += sw) {
          if (!f(static_cast<VertexId>(part + read_bits(base, pos, sw)), Weight{1})) return;
        }
      }
      return;
    }
  }
}

}  // namespace loggraph
