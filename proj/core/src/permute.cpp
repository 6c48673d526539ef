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
#include <limits>
#include <numeric>

#include "loggraph/bitio.hpp"
#include "loggraph/permute.hpp"

namespace loggraph {

Permutation::Permutation(std::vector<VertexId> forward, std::string scheme)
    : forward_(std::move(forward)), scheme_(std::move(scheme)) {
  std::vector<bool> seen(forward_.size(), false);
  for (VertexId id : forward_) {
    if (id >= forward_.size() || seen[id]) {
      throw DomainError("permutation is not a bijection on {0.." +
                        std::to_string(forward_.size()) + "-1}");
    }
    seen[id] = true;
  }
}

Permutation Permutation::identity(std::uint64_t n) {
  std::vector<VertexId> forward(n);
  std::iota(forward.begin(), forward.end(), VertexId{0});
  Permutation p;
  p.forward_ = std::move(forward);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < forward_.size(); ++i) {
    if (forward_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<VertexId> inv(forward_.size());
  for (std::size_t i = 0; i < forward_.size(); ++i) inv[forward_[i]] = static_cast<VertexId>(i);
  Permutation p;
  p.forward_ = std::move(inv);
  p.scheme_ = scheme_ + "^-1";
  return p;
}

void Permutation::write(BinaryWriter& out) const {
  out.string(scheme_);
  out.u64(forward_.size());
  for (VertexId id : forward_) out.u32(id);
}

Permutation Permutation::read(BinaryReader& in) {
  std::string scheme = in.string();
  const std::uint64_t n = in.u64();
  if (n > in.remaining() / 4) throw DecodeError("permutation length exceeds input");
  std::vector<VertexId> forward(n);
  for (auto& id : forward) id = in.u32();
  try {
    return Permutation(std::move(forward), std::move(scheme));
  } catch (const DomainError& e) {
    throw DecodeError(e.what());
  }
}

AdjacencyGraph apply(const AdjacencyGraph& g, const Permutation& p) {
  const std::uint64_t n = g.num_vertices();
  if (p.size() != n) throw DomainError("permutation size differs from vertex count");
  const Permutation inv = p.inverse();
  const bool weighted = !g.weight_array().empty();
  std::vector<EdgeIndex> offsets(n + 1, 0);
  std::vector<VertexId> neighbors;
  std::vector<Weight> weights;
  neighbors.reserve(g.neighbor_array().size());
  if (weighted) weights.reserve(g.neighbor_array().size());
  std::vector<std::pair<VertexId, Weight>> scratch;
  for (VertexId u = 0; u < n; ++u) {
    const VertexId old = inv(u);
    auto nbrs = g.neighbors(old);
    auto wts = g.weights(old);
    scratch.clear();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      scratch.emplace_back(p(nbrs[i]), weighted ? wts[i] : 0);
    }
    std::sort(scratch.begin(), scratch.end());
    for (auto [id, w] : scratch) {
      neighbors.push_back(id);
      if (weighted) weights.push_back(w);
    }
    offsets[u + 1] = neighbors.size();
  }
  return AdjacencyGraph(std::move(offsets), std::move(neighbors), std::move(weights), g.weighted());
}

Permutation degree_min(const AdjacencyGraph& g) {
  const std::uint64_t n = g.num_vertices();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  std::vector<VertexId> forward(n);
  for (std::uint64_t i = 0; i < n; ++i) forward[order[i]] = static_cast<VertexId>(i);
  return Permutation(std::move(forward), "degmin");
}

Permutation greedy_relabel(const AdjacencyGraph& g) {
  const std::uint64_t n = g.num_vertices();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return g.degree(a) < g.degree(b); });
  std::vector<VertexId> forward(n);
  std::vector<bool> visited(n, false);
  VertexId next_label = 0;
  for (VertexId v : order) {
    for (VertexId u : g.neighbors(v)) {
      if (!visited[u]) {
        forward[u] = next_label++;
        visited[u] = true;
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!visited[v]) forward[v] = next_label++;
  }
  return Permutation(std::move(forward), "greedy");
}

double max_id_objective(const AdjacencyGraph& g, const Permutation& p) {
  double total = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto nbrs = g.neighbors(v);
    if (nbrs.empty()) continue;
    VertexId widest = 0;
    for (VertexId u : nbrs) widest = std::max(widest, p(u));
    total += static_cast<double>(widest) / static_cast<double>(nbrs.size());
  }
  return total;
}

double gap_objective(const AdjacencyGraph& g, const Permutation& p) {
  double total = 0;
  std::vector<VertexId> labels;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto nbrs = g.neighbors(v);
    if (nbrs.empty()) continue;
    labels.clear();
    for (VertexId u : nbrs) labels.push_back(p(u));
    std::sort(labels.begin(), labels.end());
    const auto self = static_cast<std::int64_t>(p(v));
    total += static_cast<double>(std::abs(static_cast<std::int64_t>(labels.front()) - self));
    total += static_cast<double>(labels.back() - labels.front());
  }
  return total;
}

Permutation brute_force_opt(const AdjacencyGraph& g, const LabelingObjective& objective) {
  const std::uint64_t n = g.num_vertices();
  if (n > 9) throw CapacityError("brute-force labeling is limited to n <= 9");
  std::vector<VertexId> forward(n);
  std::iota(forward.begin(), forward.end(), VertexId{0});
  std::vector<VertexId> best = forward;
  double best_value = std::numeric_limits<double>::infinity();
  do {
    const double value = objective(g, Permutation(forward, "bruteforce"));
    if (value < best_value) {
      best_value = value;
      best = forward;
    }
  } while (std::next_permutation(forward.begin(), forward.end()));
  return Permutation(std::move(best), "bruteforce");
}

bool SeparatorTree::singleton_leaves() const {
  std::vector<std::uint64_t> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Permutation rb_permutation(const SeparatorTree& tree) {
  if (!tree.singleton_leaves()) {
    throw DomainError("recursive-bisection labeling needs a separator tree with singleton leaves");
  }
  const std::uint64_t n = tree.num_vertices();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return tree.path[a] < tree.path[b]; });
  std::vector<VertexId> forward(n);
  for (std::uint64_t i = 0; i < n; ++i) forward[order[i]] = static_cast<VertexId>(i);
  return Permutation(std::move(forward), "rb");
}

BrbLabels brb_labels(const SeparatorTree& tree) {
  if (tree.depth > 32) throw CapacityError("prefix depth above 32 levels");
  const std::uint64_t n = tree.num_vertices();
  const std::uint64_t parts = std::uint64_t{1} << tree.depth;
  BrbLabels labels;
  labels.depth = tree.depth;
  labels.prefix = tree.path;
  labels.suffix.assign(n, 0);
  labels.part_start.assign(parts + 1, 0);
  for (std::uint64_t v = 0; v < n; ++v) ++labels.part_start[tree.path[v] + 1];
  std::uint64_t largest = 0;
  for (std::uint64_t i = 1; i <= parts; ++i) largest = std::max(largest, labels.part_start[i]);
  std::partial_sum(labels.part_start.begin(), labels.part_start.end(), labels.part_start.begin());
  labels.suffix_width = bits_for(largest > 0 ? largest - 1 : 0);

  std::vector<std::uint64_t> cursor(labels.part_start.begin(), labels.part_start.end() - 1);
  std::vector<VertexId> forward(n);
  for (std::uint64_t v = 0; v < n; ++v) {  // ascending old id within each part
    const std::uint64_t prefix = tree.path[v];
    labels.suffix[v] = cursor[prefix] - labels.part_start[prefix];
    forward[v] = static_cast<VertexId>(cursor[prefix]++);
  }
  labels.permutation = Permutation(std::move(forward), "brb");
  return labels;
}

}  // namespace loggraph
