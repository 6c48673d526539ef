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
#include <sstream>

#include "loggraph/compressed_graph.hpp"
#include "loggraph/container.hpp"

namespace loggraph {
namespace {

bool fixed_uniform(const FineScheme& s) {
  return !s.local_ids() && s.weight_mode != WeightMode::kLocal;
}

}  // namespace

std::string_view to_string(PermuterKind kind) {
  switch (kind) {
    case PermuterKind::kIdentity: return "identity";
    case PermuterKind::kDegreeMin: return "degmin";
    case PermuterKind::kGreedy: return "greedy";
    case PermuterKind::kRb: return "rb";
    case PermuterKind::kBrb: return "brb";
  }
  return "?";
}

PermuterKind parse_permuter(std::string_view name) {
  for (auto k : {PermuterKind::kIdentity, PermuterKind::kDegreeMin, PermuterKind::kGreedy,
                 PermuterKind::kRb, PermuterKind::kBrb}) {
    if (to_string(k) == name) return k;
  }
  throw ConfigError("unknown permuter '" + std::string(name) + "' (expected identity, degmin, greedy, rb, brb)");
}

std::string compatibility_matrix() {
  return
      "offsets \\ adjacency  global global-gap local local-gap varint-gap varint-full brb\n"
      "ptr32 ptr64 ptrlogn  yes    yes        yes   yes       yes        yes         yes\n"
      "bvpl bvil bvsd       B=w    B=w        no    no        B=8k       B=8k        B=8k\n"
      "  B=w: block size equals the entry width (ids plus global weights; local weights not allowed)\n"
      "  B=8k: block size 8, 16, 32 or 64 bits (default 8)\n"
      "  brb adjacency requires --permuter brb and --brb-depth >= 1\n"
      "  weights only with fixed-width adjacency (global, local, global-gap, local-gap)\n";
}

void check_compatibility(const BuildOptions& o) {
  auto fail = [](const std::string& why) {
    throw ConfigError("incompatible scheme combination: " + why + "\n" + compatibility_matrix());
  };
  const TransformScheme& a = o.adjacency;
  const bool bv = is_bitvector(o.offsets);
  if (a.kind == TransformKind::kFixed) {
    if (bv && !fixed_uniform(a.fine)) fail("bit-vector offsets need a uniform entry width");
  } else {
    if (a.fine.weight_mode != WeightMode::kNone) fail("weights need fixed-width adjacency");
    if (bv && o.block_bits != 0 && o.block_bits != 8 && o.block_bits != 16 &&
        o.block_bits != 32 && o.block_bits != 64) {
      fail("byte-coded adjacency needs a block size of 8, 16, 32 or 64 bits");
    }
  }
  if (a.kind == TransformKind::kBrb) {
    if (a.brb_depth == 0) fail("brb adjacency needs --brb-depth");
    if (o.permuter != PermuterKind::kBrb) fail("brb adjacency needs the brb permuter");
    if (o.brb_depth != 0 && o.brb_depth != a.brb_depth) fail("brb depths of permuter and adjacency differ");
  }
  if (o.permuter == PermuterKind::kBrb && o.brb_depth == 0 && a.brb_depth == 0) {
    fail("brb permuter needs --brb-depth");
  }
}

std::string SizeReport::csv() const {
  std::ostringstream out;
  out << "component,bits\n"
      << "offsets," << offsets_bits << "\n"
      << "offsets_raw," << offsets.raw_bits << "\n"
      << "offsets_aux," << offsets.aux_bits << "\n"
      << "offsets_side," << offsets.side_bits << "\n"
      << "payload," << payload_bits << "\n"
      << "payload_group_overhead," << group_overhead_bits << "\n"
      << "headers," << headers_bits << "\n"
      << "metadata," << metadata_bits << "\n"
      << "metadata_permutation," << permutation_bits << "\n"
      << "total," << total_bits() << "\n"
      << "csr_ptr32_baseline," << csr_baseline_bits << "\n";
  return out.str();
}

CompressedGraph CompressedGraph::build(const AdjacencyGraph& g, const BuildOptions& o) {
  check_compatibility(o);
  const FineScheme& fine = o.adjacency.fine;
  const bool fixed = o.adjacency.kind == TransformKind::kFixed;

  CompressedGraph cg;
  cg.n_ = g.num_vertices();
  cg.m_ = g.num_edges();
  cg.scheme_ = o.adjacency;
  cg.weighted_ = fixed && fine.weight_mode != WeightMode::kNone;
  cg.max_weight_ = cg.weighted_ ? g.max_weight() : 0;

  BisectOptions bo;
  bo.imbalance = o.imbalance;
  bo.seed = o.seed;
  switch (o.permuter) {
    case PermuterKind::kIdentity: break;
    case PermuterKind::kDegreeMin: cg.permutation_ = degree_min(g); break;
    case PermuterKind::kGreedy: cg.permutation_ = greedy_relabel(g); break;
    case PermuterKind::kRb: cg.permutation_ = rb_permutation(bisect_full(g, bo)); break;
    case PermuterKind::kBrb: {
      const unsigned depth = o.brb_depth ? o.brb_depth : o.adjacency.brb_depth;
      const BrbLabels labels = brb_labels(bisect(g, depth, bo));
      cg.brb_ = BrbCodec::from_labels(labels);
      cg.permutation_ = labels.permutation;
      break;
    }
  }
  AdjacencyGraph relabeled;
  const AdjacencyGraph& src = cg.permutation_ ? (relabeled = apply(g, *cg.permutation_)) : g;
  const std::uint64_t n = cg.n_;

  unsigned unit = 1;
  unsigned block = 1;
  if (fixed) {
    cg.layout_ = plan_fine_layout(src, fine);
    const unsigned w = cg.layout_.uniform_entry_width();
    unit = w ? w : 1;
    if (is_bitvector(o.offsets)) {
      if (o.block_bits != 0 && o.block_bits != w) {
        throw ConfigError("incompatible scheme combination: block size must equal the entry width " +
                          std::to_string(w) + "\n" + compatibility_matrix());
      }
      block = w;
    }
  } else {
    cg.layout_.scheme = FineScheme{};
    cg.layout_.n = n;
    unit = 8;
    if (is_bitvector(o.offsets)) block = o.block_bits ? o.block_bits : 8;
  }
  cg.block_bits_ = is_bitvector(o.offsets) ? block : 0;

  BitWriter out;
  std::vector<std::uint64_t> starts(n + 1);
  std::vector<std::uint64_t> id_headers, weight_headers;
  if (cg.layout_.id_header_bits) id_headers.resize(n);
  if (cg.layout_.weight_header_bits) weight_headers.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    starts[v] = out.bit_length();
    auto nbrs = src.neighbors(v);
    switch (o.adjacency.kind) {
      case TransformKind::kFixed: {
        const auto code = encode_neighborhood(v, nbrs, src.weights(v), cg.layout_);
        write_neighborhood(out, code, cg.layout_);
        if (!id_headers.empty()) id_headers[v] = code.header.id_width - 1;
        if (!weight_headers.empty()) weight_headers[v] = code.header.weight_width - 1;
        break;
      }
      case TransformKind::kVarintGap:
      case TransformKind::kVarintFull:
        write_varint_neighborhood(out, v, nbrs, o.adjacency.kind == TransformKind::kVarintGap);
        out.align(block, true);
        break;
      case TransformKind::kBrb:
        write_brb_neighborhood(out, nbrs, cg.brb_);
        out.align(std::max(block, 8u), false);
        break;
    }
  }
  starts[n] = out.bit_length();
  cg.payload_bits_ = starts[n];
  cg.payload_ = std::move(out).finish();
  if (cg.layout_.id_header_bits) cg.id_headers_ = PackedArray(id_headers, cg.layout_.id_header_bits);
  if (cg.layout_.weight_header_bits) {
    cg.weight_headers_ = PackedArray(weight_headers, cg.layout_.weight_header_bits);
  }

  OffsetOptions oo;
  oo.kind = o.offsets;
  oo.unit_bits = unit;
  oo.block_bits = block;
  oo.interleave_period = o.interleave_period;
  cg.offsets_ = OffsetStructure(starts, oo);
  return cg;
}

void CompressedGraph::check(VertexId v) const {
  if (v >= n_) {
    throw DomainError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n_) + ")");
  }
}

std::uint64_t CompressedGraph::degree(VertexId v) const {
  check(v);
  const auto [begin, end] = offsets_.bounds(v);
  if (begin == end) return 0;
  switch (scheme_.kind) {
    case TransformKind::kFixed:
      return fine_degree(end - begin, header(v), layout_);
    case TransformKind::kVarintGap:
    case TransformKind::kVarintFull:
      return varint_count(payload_.data() + begin / 8, payload_.data() + end / 8);
    case TransformKind::kBrb: break;
  }
  std::uint64_t count = 0;
  scan(v, [&](VertexId, Weight) {
    ++count;
    return true;
  });
  return count;
}

VertexId CompressedGraph::neighbor(VertexId v, std::uint64_t i) const {
  check(v);
  if (scheme_.kind == TransformKind::kFixed && !layout_.scheme.gaps()) {
    const std::uint64_t d = degree(v);
    if (i >= d) {
      throw DomainError("neighbor index " + std::to_string(i) + " out of range for degree " + std::to_string(d));
    }
    const NeighborhoodHeader h = header(v);
    const unsigned wb = layout_.scheme.weight_mode == WeightMode::kNone ? 0
                        : layout_.scheme.weight_mode == WeightMode::kGlobal ? layout_.weight_width
                                                                            : h.weight_width;
    const unsigned ib = layout_.scheme.local_ids() ? h.id_width : layout_.id_width;
    const std::uint64_t pos = offsets_.bit_offset(v) + i * (ib + wb);
    return static_cast<VertexId>(read_bits(payload_.data(), pos, ib));
  }
  std::uint64_t k = 0;
  VertexId found = 0;
  bool hit = false;
  scan(v, [&](VertexId u, Weight) {
    if (k++ == i) {
      found = u;
      hit = true;
      return false;
    }
    return true;
  });
  if (!hit) {
    throw DomainError("neighbor index " + std::to_string(i) + " out of range for degree " + std::to_string(k));
  }
  return found;
}

std::vector<VertexId> CompressedGraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  scan(v, [&](VertexId u, Weight) {
    out.push_back(u);
    return true;
  });
  return out;
}

std::vector<Weight> CompressedGraph::weights(VertexId v) const {
  std::vector<Weight> out;
  if (!weighted_) {
    check(v);
    return out;
  }
  scan(v, [&](VertexId, Weight w) {
    out.push_back(w);
    return true;
  });
  return out;
}

AdjacencyGraph CompressedGraph::decode() const {
  std::vector<EdgeIndex> offsets(n_ + 1, 0);
  std::vector<VertexId> nbrs;
  std::vector<Weight> wts;
  nbrs.reserve(2 * m_);
  for (VertexId v = 0; v < n_; ++v) {
    scan(v, [&](VertexId u, Weight w) {
      nbrs.push_back(u);
      if (weighted_) wts.push_back(w);
      return true;
    });
    offsets[v + 1] = nbrs.size();
  }
  return AdjacencyGraph(std::move(offsets), std::move(nbrs), std::move(wts), weighted_);
}

SizeReport CompressedGraph::size_report() const {
  SizeReport r;
  r.offsets = offsets_.size_report();
  r.offsets_bits = r.offsets.total_bits();
  r.payload_bits = payload_bits_;
  r.headers_bits = id_headers_.bit_length() + weight_headers_.bit_length();
  if (permutation_) r.permutation_bits = 32 * permutation_->size();
  if (scheme_.kind == TransformKind::kBrb) {
    for (VertexId v = 0; v < n_; ++v) {
      for (const auto& group : brb_groups(neighbors(v), brb_)) {
        r.group_overhead_bits += brb_.group_overhead_bits(group.suffixes.size());
      }
    }
  }
  const std::uint64_t container_bits = 8 * encode_container(*this).size();
  if (container_bits < r.structure_bits()) {
    throw Error("size accounting exceeds the serialized container");
  }
  r.metadata_bits = container_bits - r.structure_bits();
  r.csr_baseline_bits = 32 * (n_ + 1) + 2 * m_ * 32 + (weighted_ ? 2 * m_ * 32 : 0);
  return r;
}

}  // namespace loggraph
