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
#include <functional>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

#include "loggraph/algorithms.hpp"
#include "loggraph/graph.hpp"

// Independent reference implementations used as test oracles.
namespace loggraph::testing {

inline std::vector<std::uint32_t> queue_bfs(const AdjacencyGraph& g, VertexId s) {
  std::vector<std::uint32_t> d(g.num_vertices(), kUnreachedHops);
  std::queue<VertexId> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (VertexId u : g.neighbors(v)) {
      if (d[u] == kUnreachedHops) {
        d[u] = d[v] + 1;
        q.push(u);
      }
    }
  }
  return d;
}

inline std::vector<std::uint64_t> dijkstra(const AdjacencyGraph& g, VertexId s) {
  std::vector<std::uint64_t> d(g.num_vertices(), kUnreachedDistance);
  using Item = std::pair<std::uint64_t, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  d[s] = 0;
  pq.emplace(0, s);
  while (!pq.empty()) {
    auto [dv, v] = pq.top();
    pq.pop();
    if (dv != d[v]) continue;
    auto nbrs = g.neighbors(v);
    auto wts = g.weights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (dv + wts[i] < d[nbrs[i]]) {
        d[nbrs[i]] = dv + wts[i];
        pq.emplace(d[nbrs[i]], nbrs[i]);
      }
    }
  }
  return d;
}

inline std::vector<VertexId> union_find_labels(const AdjacencyGraph& g) {
  std::vector<VertexId> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<VertexId(VertexId)> find = [&](VertexId x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (VertexId u : g.neighbors(v)) {
      VertexId a = find(u), b = find(v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<VertexId> label(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) label[v] = find(v);
  return label;
}

inline std::uint64_t brute_triangles(const AdjacencyGraph& g) {
  const auto n = g.num_vertices();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u : g.neighbors(v)) adj[v][u] = true;
  }
  std::uint64_t t = 0;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (!adj[a][b]) continue;
      for (VertexId c = b + 1; c < n; ++c) t += adj[a][c] && adj[b][c];
    }
  }
  return t;
}

}  // namespace loggraph::testing
