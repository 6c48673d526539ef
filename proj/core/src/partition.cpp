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
#include <cmath>
#include <cstdint>
#include <queue>
#include <vector>

#include "loggraph/permute.hpp"
#include "loggraph/random.hpp"

namespace loggraph {
namespace {

class PartBisector {
 public:
  PartBisector(const AdjacencyGraph& g, const BisectOptions& options)
      : g_(g), options_(options), rng_(options.seed), local_(g.num_vertices(), -1) {}

  // Splits `part` (ascending ids) into sides 0/1; returns the cut.
  std::uint64_t run(const std::vector<VertexId>& part, std::vector<std::uint8_t>& side) {
    const std::int64_t s = static_cast<std::int64_t>(part.size());
    for (std::int64_t i = 0; i < s; ++i) local_[part[i]] = static_cast<std::int32_t>(i);
    build_local(part);
    for (VertexId v : part) local_[v] = -1;

    const auto slack = static_cast<std::int64_t>(std::floor(options_.imbalance * static_cast<double>(s) / 2.0));
    lo_ = std::max<std::int64_t>(1, s / 2 - slack);
    hi_ = std::min<std::int64_t>(s - 1, (s + 1) / 2 + slack);

    grow(s, side);
    std::int64_t cut = compute_gains(side);
    for (unsigned pass = 0; pass < options_.max_passes; ++pass) {
      const std::int64_t improved = fm_pass(side, cut);
      if (improved >= cut) break;
      cut = compute_gains(side);
    }
    if (side[0] == 1) {
      for (auto& x : side) x ^= 1;
    }
    return static_cast<std::uint64_t>(cut);
  }

 private:
  void build_local(const std::vector<VertexId>& part) {
    offsets_.assign(part.size() + 1, 0);
    adj_.clear();
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (VertexId u : g_.neighbors(part[i])) {
        const std::int32_t j = local_[u];
        if (j >= 0 && u != part[i]) adj_.push_back(j);
      }
      offsets_[i + 1] = adj_.size();
    }
  }

  template <class F>
  void each(std::int64_t i, F&& f) const {
    for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k) f(adj_[k]);
  }

  // BFS order from `start`, restarting at the lowest unvisited index.
  std::vector<std::int32_t> bfs_order(std::int64_t s, std::int32_t start) const {
    std::vector<std::int32_t> order;
    order.reserve(s);
    std::vector<bool> seen(s, false);
    std::int32_t next_root = 0;
    std::int32_t root = start;
    while (static_cast<std::int64_t>(order.size()) < s) {
      while (seen[root]) root = next_root++;
      std::size_t head = order.size();
      order.push_back(root);
      seen[root] = true;
      while (head < order.size()) {
        each(order[head++], [&](std::int32_t j) {
          if (!seen[j]) {
            seen[j] = true;
            order.push_back(j);
          }
        });
      }
    }
    return order;
  }

  void grow(std::int64_t s, std::vector<std::uint8_t>& side) {
    const auto start = static_cast<std::int32_t>(rng_.below(static_cast<std::uint64_t>(s)));
    // The vertex found last by a BFS sits far from the start.
    const std::int32_t seed = bfs_order(s, start).back();
    const auto order = bfs_order(s, seed);
    side.assign(s, 1);
    for (std::int64_t k = 0; k < s / 2; ++k) side[order[k]] = 0;
    size0_ = s / 2;
  }

  std::int64_t compute_gains(const std::vector<std::uint8_t>& side) {
    const std::size_t s = side.size();
    gain_.assign(s, 0);
    std::int64_t external = 0;
    size0_ = 0;
    for (std::size_t i = 0; i < s; ++i) {
      if (side[i] == 0) ++size0_;
      each(i, [&](std::int32_t j) {
        if (side[j] != side[i]) {
          ++gain_[i];
          ++external;
        } else {
          --gain_[i];
        }
      });
    }
    return external / 2;
  }

  using Entry = std::pair<std::int64_t, std::int32_t>;  // (gain, -index)

  // One Fiduccia-Mattheyses pass; keeps the best balanced prefix of moves.
  std::int64_t fm_pass(std::vector<std::uint8_t>& side, std::int64_t cut) {
    const std::size_t s = side.size();
    std::priority_queue<Entry> heap[2];
    for (std::size_t i = 0; i < s; ++i) heap[side[i]].emplace(gain_[i], -static_cast<std::int32_t>(i));
    std::vector<bool> locked(s, false);
    std::vector<std::int32_t> moves;
    std::int64_t current = cut;
    std::int64_t best = cut;
    std::size_t best_len = 0;

    auto top = [&](int from) -> std::int32_t {
      auto& h = heap[from];
      while (!h.empty()) {
        auto [gain, neg] = h.top();
        const std::int32_t i = -neg;
        if (!locked[i] && side[i] == from && gain_[i] == gain) return i;
        h.pop();
      }
      return -1;
    };

    while (true) {
      std::int32_t a = size0_ - 1 >= lo_ - 1 ? top(0) : -1;
      std::int32_t b = size0_ + 1 <= hi_ + 1 ? top(1) : -1;
      std::int32_t pick;
      if (a < 0 && b < 0) break;
      if (a < 0) {
        pick = b;
      } else if (b < 0) {
        pick = a;
      } else if (gain_[a] != gain_[b]) {
        pick = gain_[a] > gain_[b] ? a : b;
      } else {
        pick = size0_ >= static_cast<std::int64_t>(s) - size0_ ? a : b;
      }
      const std::uint8_t to = side[pick] ^ 1;
      side[pick] = to;
      locked[pick] = true;
      size0_ += to == 0 ? 1 : -1;
      current -= gain_[pick];
      gain_[pick] = -gain_[pick];
      each(pick, [&](std::int32_t j) {
        gain_[j] += side[j] == to ? -2 : 2;
        if (!locked[j]) heap[side[j]].emplace(gain_[j], -j);
      });
      moves.push_back(pick);
      if (current < best && size0_ >= lo_ && size0_ <= hi_) {
        best = current;
        best_len = moves.size();
      }
    }
    for (std::size_t k = moves.size(); k > best_len; --k) side[moves[k - 1]] ^= 1;
    return best;
  }

  const AdjacencyGraph& g_;
  BisectOptions options_;
  Rng rng_;
  std::vector<std::int32_t> local_;
  std::vector<std::size_t> offsets_;
  std::vector<std::int32_t> adj_;
  std::vector<std::int64_t> gain_;
  std::int64_t lo_ = 0, hi_ = 0, size0_ = 0;
};

SeparatorTree run_bisection(const AdjacencyGraph& g, unsigned depth, bool until_singletons,
                            const BisectOptions& options) {
  if (options.imbalance < 0 || options.imbalance >= 1) {
    throw ConfigError("imbalance must lie in [0, 1)");
  }
  const std::uint64_t n = g.num_vertices();
  SeparatorTree tree;
  tree.imbalance = options.imbalance;
  tree.path.assign(n, 0);
  std::vector<std::vector<VertexId>> parts;
  if (n > 0) {
    parts.emplace_back(n);
    for (std::uint64_t v = 0; v < n; ++v) parts[0][v] = static_cast<VertexId>(v);
  }
  PartBisector bisector(g, options);
  std::vector<std::uint8_t> side;
  unsigned level = 0;
  while (until_singletons ? std::any_of(parts.begin(), parts.end(),
                                        [](const auto& p) { return p.size() > 1; })
                          : level < depth) {
    if (level == 64) throw CapacityError("separator tree deeper than 64 levels");
    std::vector<std::vector<VertexId>> next;
    std::uint64_t cut = 0;
    for (auto& part : parts) {
      if (part.size() <= 1) {
        for (VertexId v : part) tree.path[v] <<= 1;
        next.push_back(std::move(part));
        continue;
      }
      cut += bisector.run(part, side);
      std::vector<VertexId> zero, one;
      for (std::size_t i = 0; i < part.size(); ++i) {
        tree.path[part[i]] = (tree.path[part[i]] << 1) | side[i];
        (side[i] ? one : zero).push_back(part[i]);
      }
      next.push_back(std::move(zero));
      next.push_back(std::move(one));
    }
    parts = std::move(next);
    tree.level_cuts.push_back(cut);
    ++level;
  }
  tree.depth = level;
  return tree;
}

}  // namespace

SeparatorTree bisect(const AdjacencyGraph& g, unsigned depth, const BisectOptions& options) {
  if (depth == 0) throw ConfigError("bisection depth must be at least 1");
  return run_bisection(g, depth, false, options);
}

SeparatorTree bisect_full(const AdjacencyGraph& g, const BisectOptions& options) {
  return run_bisection(g, 0, true, options);
}

}  // namespace loggraph
