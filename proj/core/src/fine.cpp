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

#include "loggraph/fine.hpp"

namespace loggraph {
namespace {

unsigned weight_bits(const FineLayout& layout, const NeighborhoodHeader& header) {
  switch (layout.scheme.weight_mode) {
    case WeightMode::kNone: return 0;
    case WeightMode::kGlobal: return layout.weight_width;
    case WeightMode::kLocal: return header.weight_width;
  }
  return 0;
}

unsigned id_bits(const FineLayout& layout, const NeighborhoodHeader& header, std::uint64_t i) {
  if (!layout.scheme.local_ids()) return layout.id_width;
  if (layout.scheme.gaps() && i == 0) return layout.first_width;
  return header.id_width;
}

void check_sorted(std::span<const VertexId> neighbors) {
  for (std::size_t i = 1; i < neighbors.size(); ++i) {
    if (neighbors[i - 1] >= neighbors[i]) {
      throw EncodeError("neighborhood must be strictly ascending");
    }
  }
}

std::uint64_t first_gap(VertexId v, VertexId first) {
  return zigzag(static_cast<std::int64_t>(first) - static_cast<std::int64_t>(v));
}

// Width a neighborhood would need for its id entries, ignoring the shared
// first-gap width in local gap mode.
unsigned local_id_width(std::span<const VertexId> nbrs, bool gaps) {
  if (nbrs.empty()) return 1;
  if (!gaps) return bits_for(nbrs.back());
  std::uint64_t widest = 0;
  for (std::size_t i = 1; i < nbrs.size(); ++i) widest = std::max<std::uint64_t>(widest, nbrs[i] - nbrs[i - 1]);
  return bits_for(widest);
}

}  // namespace

std::string to_string(const FineScheme& s) {
  std::string name = s.local_ids() ? "local" : "global";
  if (s.gaps()) name += "-gap";
  if (s.weight_mode == WeightMode::kGlobal) name += "+wg";
  if (s.weight_mode == WeightMode::kLocal) name += "+wl";
  return name;
}

unsigned FineLayout::uniform_entry_width() const {
  if (scheme.local_ids() || scheme.weight_mode == WeightMode::kLocal) return 0;
  return id_width + (scheme.weight_mode == WeightMode::kGlobal ? weight_width : 0);
}

FineLayout plan_fine_layout(const AdjacencyGraph& g, const FineScheme& scheme) {
  if (scheme.weight_mode != WeightMode::kNone && !g.weighted()) {
    throw ConfigError("weight encoding requested for an unweighted graph");
  }
  FineLayout layout;
  layout.scheme = scheme;
  layout.n = g.num_vertices();
  const std::uint64_t n = layout.n;

  unsigned widest_local_id = 1;
  unsigned widest_local_weight = 1;
  std::uint64_t widest_entry = 0;
  std::uint64_t widest_first = 0;
  for (VertexId v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v);
    if (nbrs.empty()) continue;
    const std::uint64_t first = first_gap(v, nbrs.front());
    widest_first = std::max(widest_first, first);
    if (scheme.gaps() && !scheme.local_ids()) {
      widest_entry = std::max(widest_entry, first);
      for (std::size_t i = 1; i < nbrs.size(); ++i) {
        widest_entry = std::max<std::uint64_t>(widest_entry, nbrs[i] - nbrs[i - 1]);
      }
    }
    if (scheme.local_ids()) {
      widest_local_id = std::max(widest_local_id, local_id_width(nbrs, scheme.gaps()));
    }
    if (scheme.weight_mode == WeightMode::kLocal) {
      auto w = g.weights(v);
      widest_local_weight = std::max(widest_local_weight, bits_for(*std::max_element(w.begin(), w.end())));
    }
  }

  if (!scheme.local_ids()) {
    layout.id_width = scheme.gaps() ? bits_for(widest_entry) : bits_for(n > 0 ? n - 1 : 0);
  } else {
    layout.id_header_bits = bits_for(widest_local_id - 1);
    if (scheme.gaps()) layout.first_width = bits_for(widest_first);
  }
  if (scheme.weight_mode == WeightMode::kGlobal) layout.weight_width = bits_for(g.max_weight());
  if (scheme.weight_mode == WeightMode::kLocal) {
    layout.weight_header_bits = bits_for(widest_local_weight - 1);
  }
  return layout;
}

EncodedNeighborhood encode_neighborhood(VertexId v, std::span<const VertexId> neighbors,
                                        std::span<const Weight> weights,
                                        const FineLayout& layout) {
  check_sorted(neighbors);
  const FineScheme& s = layout.scheme;
  if (s.weight_mode != WeightMode::kNone && weights.size() != neighbors.size()) {
    throw EncodeError("weighted scheme needs one weight per neighbor");
  }
  EncodedNeighborhood code;
  code.ids.reserve(neighbors.size());
  if (s.gaps() && !neighbors.empty()) {
    code.ids.push_back(first_gap(v, neighbors.front()));
    for (std::size_t i = 1; i < neighbors.size(); ++i) {
      code.ids.push_back(neighbors[i] - neighbors[i - 1]);
    }
  } else {
    code.ids.assign(neighbors.begin(), neighbors.end());
  }
  if (s.local_ids()) code.header.id_width = local_id_width(neighbors, s.gaps());
  if (s.weight_mode != WeightMode::kNone) {
    code.weights.assign(weights.begin(), weights.end());
    if (s.weight_mode == WeightMode::kLocal && !weights.empty()) {
      code.header.weight_width = bits_for(*std::max_element(weights.begin(), weights.end()));
    }
  }
  const unsigned wb = weight_bits(layout, code.header);
  for (std::size_t i = 0; i < code.ids.size(); ++i) {
    const unsigned ib = id_bits(layout, code.header, i);
    if (ib < 64 && (code.ids[i] >> ib) != 0) {
      throw EncodeError("entry " + std::to_string(code.ids[i]) + " exceeds the " +
                        std::to_string(ib) + "-bit width of the layout");
    }
    code.bits += ib + wb;
  }
  return code;
}

void write_neighborhood(BitWriter& out, const EncodedNeighborhood& code, const FineLayout& layout) {
  const unsigned wb = weight_bits(layout, code.header);
  for (std::size_t i = 0; i < code.ids.size(); ++i) {
    out.write(code.ids[i], id_bits(layout, code.header, i));
    if (wb > 0) out.write(code.weights[i], wb);
  }
}

std::uint64_t fine_degree(std::uint64_t span_bits, const NeighborhoodHeader& header,
                          const FineLayout& layout) {
  if (span_bits == 0) return 0;
  const unsigned wb = weight_bits(layout, header);
  if (layout.scheme.local_ids() && layout.scheme.gaps()) {
    return 1 + (span_bits - layout.first_width - wb) / (header.id_width + wb);
  }
  return span_bits / (id_bits(layout, header, 0) + wb);
}

std::vector<VertexId> decode_neighborhood(const std::uint8_t* payload, std::uint64_t begin_bit,
                                          std::uint64_t end_bit, VertexId v,
                                          const NeighborhoodHeader& header,
                                          const FineLayout& layout,
                                          std::vector<Weight>* weights) {
  const std::uint64_t degree = fine_degree(end_bit - begin_bit, header, layout);
  const unsigned wb = weight_bits(layout, header);
  std::vector<VertexId> out;
  out.reserve(degree);
  if (weights) weights->clear();
  std::uint64_t pos = begin_bit;
  std::uint64_t prev = 0;
  for (std::uint64_t i = 0; i < degree; ++i) {
    const unsigned ib = id_bits(layout, header, i);
    const std::uint64_t raw = read_bits(payload, pos, ib);
    pos += ib;
    std::uint64_t id = raw;
    if (layout.scheme.gaps()) {
      id = i == 0 ? static_cast<std::uint64_t>(static_cast<std::int64_t>(v) + unzigzag(raw))
                  : prev + raw;
    }
    out.push_back(static_cast<VertexId>(id));
    prev = id;
    if (wb > 0) {
      const auto w = static_cast<Weight>(read_bits(payload, pos, wb));
      pos += wb;
      if (weights) weights->push_back(w);
    }
  }
  return out;
}

FineSizeReport fine_size_bits(const AdjacencyGraph& g, const FineScheme& scheme) {
  const FineLayout layout = plan_fine_layout(g, scheme);
  FineSizeReport report;
  const std::uint64_t n = g.num_vertices();
  const double log_n = ceil_log2(n);
  const double log_w = ceil_log2(g.max_weight());
  for (VertexId v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v);
    const auto code = encode_neighborhood(v, nbrs, g.weights(v), layout);
    report.payload_bits += code.bits;
    if (nbrs.empty()) continue;
    const double d = static_cast<double>(nbrs.size());
    if (scheme.gaps()) {
      // No closed form beyond the encoding rule itself.
      report.formula_payload_bits += static_cast<double>(code.bits);
      continue;
    }
    if (scheme.local_ids()) {
      const unsigned local = ceil_log2(nbrs.back());
      report.formula_payload_bits += d * local;
      report.formula_header_bits += ceil_log2(local);
    } else {
      report.formula_payload_bits += d * log_n;
    }
    if (scheme.weight_mode == WeightMode::kGlobal) report.formula_payload_bits += d * log_w;
    if (scheme.weight_mode == WeightMode::kLocal) {
      auto w = g.weights(v);
      const unsigned local = ceil_log2(*std::max_element(w.begin(), w.end()));
      report.formula_payload_bits += d * local;
      report.formula_header_bits += ceil_log2(local);
    }
  }
  if (scheme.gaps()) report.formula_header_bits = static_cast<double>(n) * (layout.id_header_bits + layout.weight_header_bits);
  report.header_bits = n * (layout.id_header_bits + layout.weight_header_bits);
  return report;
}

namespace {

// ceil(log2(a / b)) for a, b >= 1, computed exactly (0 when a <= b).
std::uint64_t ceil_log2_ratio(std::uint64_t a, std::uint64_t b) {
  std::uint64_t k = 0;
  unsigned __int128 scaled = b;
  while (scaled < a) {
    scaled <<= 1;
    ++k;
  }
  return k;
}

}  // namespace

std::uint64_t hierarchical_size_flat(std::uint64_t n, std::uint64_t nodes) {
  if (nodes == 0) throw DomainError("node count must be positive");
  return n * ceil_log2_ratio(n, nodes) + nodes * ceil_log2(nodes);
}

std::uint64_t hierarchical_size(std::uint64_t n, const HierarchySpec& hierarchy) {
  const auto& h = hierarchy.counts;
  if (h.empty() || h.front() != 1) throw DomainError("hierarchy must start with H_1 = 1");
  for (std::uint64_t c : h) {
    if (c == 0) throw DomainError("hierarchy counts must be positive");
  }
  std::uint64_t bits = n * ceil_log2_ratio(n, h.back());
  for (std::size_t j = 1; j + 1 < h.size(); ++j) bits += h[j] * ceil_log2(h[j]);
  return bits;
}

AccessCost cost_model(const AccessLatencies& p, std::uint64_t degree) {
  AccessCost c;
  c.t_edge = 2 * p.t_cm + p.t_mul + p.t_shf + p.t_and + p.t_bxr;
  const double extra = degree > 0 ? static_cast<double>(degree - 1) : 0.0;
  c.t_neigh = c.t_edge + extra * (p.t_add + p.t_shf + p.t_and + p.t_bxr);
  c.t_degree = 2 * p.t_cm + p.t_sub;
  return c;
}

}  // namespace loggraph
