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
#include <istream>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "loggraph/types.hpp"

namespace loggraph {

// Uncompressed CSR-style undirected graph: every edge stored in both
// directions, each neighborhood sorted strictly ascending. Immutable after
// construction.
class AdjacencyGraph {
 public:
  AdjacencyGraph() : offsets_(1, 0) {}

  // Takes ownership of CSR arrays and validates the invariants (sortedness,
  // range, symmetry, weight symmetry). Throws DomainError on violation.
  // An edgeless graph can still be flagged weighted via `weighted`.
  AdjacencyGraph(std::vector<EdgeIndex> offsets, std::vector<VertexId> neighbors,
                 std::vector<Weight> weights = {}, bool weighted = false);

  // Builds from an undirected edge list; self-loops dropped, duplicates
  // merged keeping the minimum weight. `weights` is empty or parallel to
  // `edges`.
  static AdjacencyGraph from_edges(std::uint64_t n,
                                   std::span<const std::pair<VertexId, VertexId>> edges,
                                   std::span<const Weight> weights = {},
                                   bool weighted = false);

  std::uint64_t num_vertices() const { return offsets_.size() - 1; }
  std::uint64_t num_edges() const { return neighbors_.size() / 2; }
  bool weighted() const { return weighted_; }
  Weight max_weight() const { return max_weight_; }

  std::uint64_t degree(VertexId v) const {
    check(v);
    return offsets_[v + 1] - offsets_[v];
  }
  std::span<const VertexId> neighbors(VertexId v) const {
    check(v);
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::span<const Weight> weights(VertexId v) const {
    check(v);
    if (weights_.empty()) return {};
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }

  // Neighbor visitation shared with CompressedGraph. The callback may return
  // bool; returning false stops the scan.
  template <class F>
  void for_each_neighbor(VertexId v, F&& f) const {
    for (EdgeIndex e = offsets_[v], end = offsets_[v + 1]; e < end; ++e) {
      if constexpr (std::is_same_v<std::invoke_result_t<F, VertexId>, bool>) {
        if (!f(neighbors_[e])) return;
      } else {
        f(neighbors_[e]);
      }
    }
  }
  template <class F>
  void for_each_weighted_neighbor(VertexId v, F&& f) const {
    for (EdgeIndex e = offsets_[v], end = offsets_[v + 1]; e < end; ++e) {
      f(neighbors_[e], weights_.empty() ? Weight{1} : weights_[e]);
    }
  }

  const std::vector<EdgeIndex>& offsets() const { return offsets_; }
  const std::vector<VertexId>& neighbor_array() const { return neighbors_; }
  const std::vector<Weight>& weight_array() const { return weights_; }

  friend bool operator==(const AdjacencyGraph& a, const AdjacencyGraph& b) {
    return a.weighted_ == b.weighted_ && a.offsets_ == b.offsets_ &&
           a.neighbors_ == b.neighbors_ && a.weights_ == b.weights_;
  }

 private:
  void check(VertexId v) const {
    if (v >= num_vertices()) {
      throw DomainError("vertex " + std::to_string(v) + " out of range [0, " +
                        std::to_string(num_vertices()) + ")");
    }
  }

  std::vector<EdgeIndex> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<Weight> weights_;
  Weight max_weight_ = 0;
  bool weighted_ = false;
};

struct LoadOptions {
  bool weighted = false;
};

// Parses "u v" / "u v w" lines ('#' comments, blank lines skipped). Vertex ids
// are compacted to 0..n-1 in order of first appearance.
AdjacencyGraph load_edge_list(std::istream& in, const LoadOptions& options = {});
AdjacencyGraph load_edge_list_string(const std::string& text, const LoadOptions& options = {});

struct ErdosRenyi {
  std::uint64_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 1;
};

// Graph500 initiator probabilities (a, b, c); d = 1 - a - b - c.
struct Kronecker {
  unsigned scale = 1;
  unsigned edge_factor = 16;
  std::uint64_t seed = 1;
  double a = 0.57, b = 0.19, c = 0.19;
};

// Two planted communities of equal size with shuffled vertex ids.
struct TwoCommunity {
  std::uint64_t n = 64;
  double p_in = 0.3;
  double p_out = 0.02;
  std::uint64_t seed = 1;
};

struct GraphSpec {
  std::variant<ErdosRenyi, Kronecker, TwoCommunity> generator;
  bool weighted = false;
  Weight max_weight = 255;
};

AdjacencyGraph generate(const GraphSpec& spec);

inline AdjacencyGraph generate(const ErdosRenyi& er, bool weighted = false,
                               Weight max_weight = 255) {
  return generate(GraphSpec{er, weighted, max_weight});
}
inline AdjacencyGraph generate(const Kronecker& k, bool weighted = false,
                               Weight max_weight = 255) {
  return generate(GraphSpec{k, weighted, max_weight});
}

// Symmetry / sortedness validation; returns an empty string when the graph is
// well formed, otherwise a description of the first violation.
std::string validate(const AdjacencyGraph& g);

}  // namespace loggraph
