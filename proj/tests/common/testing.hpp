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

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "loggraph/compressed_graph.hpp"
#include "loggraph/graph.hpp"

namespace loggraph::testing {

inline AdjacencyGraph make_graph(std::uint64_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  return AdjacencyGraph::from_edges(n, edges);
}

inline AdjacencyGraph make_weighted(std::uint64_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                                    const std::vector<Weight>& weights) {
  return AdjacencyGraph::from_edges(n, edges, weights, true);
}

inline AdjacencyGraph path_graph(std::uint64_t n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return make_graph(n, e);
}

inline AdjacencyGraph complete_graph(std::uint64_t n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) e.emplace_back(a, b);
  }
  return make_graph(n, e);
}

// Two 4-cliques {0..3} and {4..7} joined by the edge 3-4.
inline AdjacencyGraph two_cliques() {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId base : {0u, 4u}) {
    for (VertexId a = 0; a < 4; ++a) {
      for (VertexId b = a + 1; b < 4; ++b) e.emplace_back(base + a, base + b);
    }
  }
  e.emplace_back(3, 4);
  return make_graph(8, e);
}

// Bit i of a byte stream, LSB first.
inline std::uint64_t naive_read(const std::vector<std::uint8_t>& bytes, std::uint64_t pos, unsigned width) {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i) {
    const std::uint64_t p = pos + i;
    v |= static_cast<std::uint64_t>((bytes[p / 8] >> (p % 8)) & 1) << i;
  }
  return v;
}

inline BuildOptions options(OffsetKind o, const std::string& adjacency, PermuterKind p, unsigned depth = 2) {
  BuildOptions b;
  b.offsets = o;
  b.adjacency = parse_adjacency_scheme(adjacency, adjacency == "brb" ? depth : 0);
  b.permuter = p;
  if (p == PermuterKind::kBrb) b.brb_depth = depth;
  return b;
}

// Every valid (offsets, adjacency, permuter) triple with default block sizes.
inline std::vector<BuildOptions> all_scheme_pairs(unsigned brb_depth = 2) {
  const OffsetKind offsets[] = {OffsetKind::kPtr32,  OffsetKind::kPtr64,         OffsetKind::kPtrLogn,
                                OffsetKind::kBvPlain, OffsetKind::kBvInterleaved, OffsetKind::kBvSparse};
  const char* adjacency[] = {"global", "global-gap", "local", "local-gap", "varint-gap", "varint-full", "brb"};
  const PermuterKind permuters[] = {PermuterKind::kIdentity, PermuterKind::kDegreeMin, PermuterKind::kGreedy,
                                    PermuterKind::kRb, PermuterKind::kBrb};
  std::vector<BuildOptions> out;
  for (auto o : offsets) {
    for (const char* a : adjacency) {
      for (auto p : permuters) {
        BuildOptions b = options(o, a, p, brb_depth);
        try {
          check_compatibility(b);
        } catch (const ConfigError&) {
          continue;
        }
        out.push_back(b);
      }
    }
  }
  return out;
}

inline std::string describe(const BuildOptions& b) {
  return std::string(to_string(b.offsets)) + "/" + to_string(b.adjacency) + "/" +
         std::string(to_string(b.permuter));
}

// Compares every degree and neighborhood of `cg` with `g` mapped through the
// recorded permutation. Returns the first mismatch or an empty string.
inline std::string compare_with_ground_truth(const AdjacencyGraph& g, const CompressedGraph& cg) {
  if (cg.num_vertices() != g.num_vertices() || cg.num_edges() != g.num_edges()) return "size mismatch";
  const auto& p = cg.permutation();
  std::vector<VertexId> expect;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const VertexId nv = p ? (*p)(v) : v;
    expect.clear();
    for (VertexId u : g.neighbors(v)) expect.push_back(p ? (*p)(u) : u);
    std::sort(expect.begin(), expect.end());
    if (cg.degree(nv) != expect.size()) return "degree of " + std::to_string(v);
    if (cg.neighbors(nv) != expect) return "neighbors of " + std::to_string(v);
  }
  return {};
}

}  // namespace loggraph::testing
