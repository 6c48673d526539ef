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
#include <vector>

#include "loggraph/bitio.hpp"
#include "loggraph/graph.hpp"

namespace loggraph {

enum class IdMode : std::uint8_t { kGlobal = 0, kLocal = 1 };
enum class GapMode : std::uint8_t { kAbsolute = 0, kFixedGap = 1 };
enum class WeightMode : std::uint8_t { kNone = 0, kGlobal = 1, kLocal = 2 };

struct FineScheme {
  IdMode id_mode = IdMode::kGlobal;
  GapMode gap_mode = GapMode::kAbsolute;
  WeightMode weight_mode = WeightMode::kNone;

  bool local_ids() const { return id_mode == IdMode::kLocal; }
  bool gaps() const { return gap_mode == GapMode::kFixedGap; }
  friend bool operator==(const FineScheme&, const FineScheme&) = default;
};

std::string to_string(const FineScheme& scheme);

// Per-neighborhood widths; only meaningful in local modes.
struct NeighborhoodHeader {
  unsigned id_width = 1;
  unsigned weight_width = 1;
};

// Graph-wide parameters of a fixed-width encoding.
//
// Entries are laid out per neighborhood as (id, weight?) pairs. In gap mode
// the first id entry is zigzag(N_1 - v) and the rest are N_i - N_{i-1}. The
// local-gap variant stores the first entry at the graph-wide `first_width`
// and sizes the remaining gaps by the neighborhood's largest gap.
struct FineLayout {
  FineScheme scheme;
  std::uint64_t n = 0;
  unsigned id_width = 1;      // global modes
  unsigned first_width = 1;   // local gap mode
  unsigned weight_width = 0;  // global weights (0 when unweighted)
  unsigned id_header_bits = 0;
  unsigned weight_header_bits = 0;

  // Uniform (id + weight) entry width when every entry has the same width,
  // 0 otherwise (local modes).
  unsigned uniform_entry_width() const;
};

FineLayout plan_fine_layout(const AdjacencyGraph& g, const FineScheme& scheme);

struct EncodedNeighborhood {
  NeighborhoodHeader header;
  std::vector<std::uint64_t> ids;      // absolute ids or gaps
  std::vector<std::uint64_t> weights;  // empty unless weighted
  std::uint64_t bits = 0;              // payload bits (header excluded)
};

// Throws EncodeError if `neighbors` is not strictly ascending.
EncodedNeighborhood encode_neighborhood(VertexId v, std::span<const VertexId> neighbors,
                                        std::span<const Weight> weights,
                                        const FineLayout& layout);
void write_neighborhood(BitWriter& out, const EncodedNeighborhood& code, const FineLayout& layout);

// Number of neighbors stored in a `span_bits`-long neighborhood.
std::uint64_t fine_degree(std::uint64_t span_bits, const NeighborhoodHeader& header,
                          const FineLayout& layout);

std::vector<VertexId> decode_neighborhood(const std::uint8_t* payload, std::uint64_t begin_bit,
                                          std::uint64_t end_bit, VertexId v,
                                          const NeighborhoodHeader& header,
                                          const FineLayout& layout,
                                          std::vector<Weight>* weights = nullptr);

// Closed-form |A| next to the exact size of the encoding. The formula uses
// ceil(log2 x) widths (0 bits for a one-value universe); the encoding floors
// every width at 1 bit and stores local headers in a fixed-width field, so
// the two differ by the itemized slack.
struct FineSizeReport {
  double formula_payload_bits = 0;
  double formula_header_bits = 0;
  std::uint64_t payload_bits = 0;
  std::uint64_t header_bits = 0;  // n fixed-width headers in local modes

  double formula_bits() const { return formula_payload_bits + formula_header_bits; }
  std::uint64_t encoded_bits() const { return payload_bits + header_bits; }
  double payload_slack_bits() const { return static_cast<double>(payload_bits) - formula_payload_bits; }
  double header_slack_bits() const { return static_cast<double>(header_bits) - formula_header_bits; }
};

FineSizeReport fine_size_bits(const AdjacencyGraph& g, const FineScheme& scheme);

// Identifier storage of a graph spread over a machine hierarchy. `counts`
// holds H_1..H_N with H_1 = 1.
struct HierarchySpec {
  std::vector<std::uint64_t> counts;
};

// n*ceil(log(n/H)) + H*ceil(log H) for a flat set of H nodes.
std::uint64_t hierarchical_size_flat(std::uint64_t n, std::uint64_t nodes);
// n*ceil(log(n/H_N)) + sum_{j=2}^{N-1} H_j*ceil(log H_j).
std::uint64_t hierarchical_size(std::uint64_t n, const HierarchySpec& hierarchy);

struct AccessLatencies {
  double t_cm = 0, t_mul = 0, t_shf = 0, t_and = 0, t_bxr = 0, t_add = 0, t_sub = 0;
};

struct AccessCost {
  double t_edge = 0;
  double t_neigh = 0;
  double t_degree = 0;
};

// Latency model of the bit-extraction access path.
AccessCost cost_model(const AccessLatencies& p, std::uint64_t degree);

}  // namespace loggraph
