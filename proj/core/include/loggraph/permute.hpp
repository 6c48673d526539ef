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
#include <functional>
#include <string>
#include <vector>

#include "loggraph/graph.hpp"
#include "loggraph/serialize.hpp"

namespace loggraph {

// Bijection old id -> new id on {0..n-1}, tagged with the scheme that made it.
class Permutation {
 public:
  Permutation() = default;
  // Throws DomainError unless `forward` is a bijection on {0..size-1}.
  explicit Permutation(std::vector<VertexId> forward, std::string scheme = "custom");
  static Permutation identity(std::uint64_t n);

  VertexId operator()(VertexId old_id) const { return forward_[old_id]; }
  std::uint64_t size() const { return forward_.size(); }
  const std::vector<VertexId>& forward() const { return forward_; }
  const std::string& scheme() const { return scheme_; }
  bool is_identity() const;
  Permutation inverse() const;

  void write(BinaryWriter& out) const;
  static Permutation read(BinaryReader& in);

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.forward_ == b.forward_;
  }

 private:
  std::vector<VertexId> forward_;
  std::string scheme_ = "identity";
};

// Relabels every vertex v to p(v); neighborhoods re-sorted, weights carried.
AdjacencyGraph apply(const AdjacencyGraph& g, const Permutation& p);

// Highest degree first, ties by ascending old id.
Permutation degree_min(const AdjacencyGraph& g);

// Greedy max-id minimizer: scan vertices by ascending degree (ties by id) and
// hand the next free label to each not-yet-labeled neighbor; vertices never
// reached are labeled last in ascending id order.
Permutation greedy_relabel(const AdjacencyGraph& g);

// sum over v with d_v > 0 of max_{u in N_v} p(u) / d_v.
double max_id_objective(const AdjacencyGraph& g, const Permutation& p);
// Minimum gap arrangement: sum over v of |p(N_1) - p(v)| + sum of consecutive
// gaps of the relabeled, sorted neighborhood.
double gap_objective(const AdjacencyGraph& g, const Permutation& p);

using LabelingObjective = std::function<double(const AdjacencyGraph&, const Permutation&)>;

// Exhaustive minimizer over all n! labelings (n <= 9). Ties resolve to the
// lexicographically smallest forward array.
Permutation brute_force_opt(const AdjacencyGraph& g, const LabelingObjective& objective);

// Result of recursive bisection. Every vertex carries `depth` partition bits,
// the level-0 decision being the most significant. A part that cannot be
// split (at most one vertex) sends its vertex to the 0 side.
struct SeparatorTree {
  unsigned depth = 0;
  double imbalance = 0;
  std::vector<std::uint64_t> path;        // per vertex
  std::vector<std::uint64_t> level_cuts;  // edges cut at each level

  bool side(VertexId v, unsigned level) const { return (path[v] >> (depth - 1 - level)) & 1; }
  std::uint64_t num_vertices() const { return path.size(); }
  // True when no two vertices share a leaf.
  bool singleton_leaves() const;
};

struct BisectOptions {
  double imbalance = 0.001;
  std::uint64_t seed = 1;
  unsigned max_passes = 16;
};

// `depth` levels of edge-cut bisection (BFS-grown halves refined by
// Fiduccia-Mattheyses passes). Each side of a part of size s holds
// floor(s/2) - slack .. ceil(s/2) + slack vertices, slack = floor(D*s/2).
SeparatorTree bisect(const AdjacencyGraph& g, unsigned depth, const BisectOptions& options = {});
// Bisects until every part holds at most one vertex.
SeparatorTree bisect_full(const AdjacencyGraph& g, const BisectOptions& options = {});

// Labels leaves left to right; requires singleton leaves.
Permutation rb_permutation(const SeparatorTree& tree);

// Prefix labels of a depth-k tree. New ids enumerate parts in prefix order and
// vertices inside a part by old id, so part `prefix` occupies the contiguous
// range [part_start[prefix], part_start[prefix + 1]).
struct BrbLabels {
  unsigned depth = 0;
  unsigned suffix_width = 1;
  std::vector<std::uint64_t> prefix;      // per old vertex
  std::vector<std::uint64_t> suffix;      // per old vertex
  std::vector<std::uint64_t> part_start;  // 2^depth + 1 entries, new-id space
  Permutation permutation;
};

BrbLabels brb_labels(const SeparatorTree& tree);

}  // namespace loggraph
