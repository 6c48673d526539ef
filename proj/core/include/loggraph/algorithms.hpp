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
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "loggraph/types.hpp"

namespace loggraph {

// Works over AdjacencyGraph and CompressedGraph alike: both expose
// num_vertices, num_edges, weighted, max_weight, degree, for_each_neighbor
// and for_each_weighted_neighbor.

struct RunOptions {
  unsigned threads = 1;
  bool sequential = true;  // single worker, fixed evaluation order

  unsigned workers() const { return sequential ? 1 : std::max(1u, threads); }
};

// LOGGRAPH_THREADS if set and positive, else the hardware concurrency.
inline unsigned default_threads() {
  if (const char* env = std::getenv("LOGGRAPH_THREADS")) {
    const long t = std::strtol(env, nullptr, 10);
    if (t > 0) return static_cast<unsigned>(t);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, n) into `workers` contiguous ranges; f(begin, end, worker).
template <class F>
void parallel_for(std::uint64_t n, unsigned workers, F&& f) {
  if (workers <= 1 || n < 2) {
    f(std::uint64_t{0}, n, 0u);
    return;
  }
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n));
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  const std::uint64_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 1; w < workers; ++w) {
    const std::uint64_t begin = std::min(n, w * chunk);
    const std::uint64_t end = std::min(n, begin + chunk);
    pool.emplace_back([&f, begin, end, w] { f(begin, end, w); });
  }
  f(std::uint64_t{0}, std::min(n, chunk), 0u);
  for (auto& t : pool) t.join();
}

inline constexpr std::uint32_t kUnreachedHops = std::numeric_limits<std::uint32_t>::max();
inline constexpr std::uint64_t kUnreachedDistance = std::numeric_limits<std::uint64_t>::max();

struct BfsResult {
  std::vector<std::uint32_t> distance;  // kUnreachedHops when unreached
  std::vector<VertexId> parent;         // parent[source] = source
};

struct BfsOptions {
  double alpha = 15;
  double beta = 18;
};

// Direction-optimizing BFS: top-down while the frontier's edges stay below
// remaining/alpha, bottom-up until the frontier shrinks below n/beta.
template <class G>
BfsResult bfs(const G& g, VertexId source, const RunOptions& run = {}, const BfsOptions& opt = {}) {
  const std::uint64_t n = g.num_vertices();
  if (source >= n) throw DomainError("bfs source " + std::to_string(source) + " out of range");
  const unsigned workers = run.workers();
  BfsResult r;
  r.distance.assign(n, kUnreachedHops);
  r.parent.assign(n, kUnreachedHops);
  r.distance[source] = 0;
  r.parent[source] = source;

  std::vector<VertexId> queue{source};
  std::vector<std::vector<VertexId>> local(workers);
  std::vector<std::uint64_t> local_count(workers);
  std::vector<std::uint8_t> front, next;
  std::int64_t edges_to_check = static_cast<std::int64_t>(2 * g.num_edges());
  std::int64_t scout = static_cast<std::int64_t>(g.degree(source));
  std::uint32_t level = 0;

  while (!queue.empty()) {
    if (static_cast<double>(scout) > static_cast<double>(edges_to_check) / opt.alpha) {
      front.assign(n, 0);
      for (VertexId v : queue) front[v] = 1;
      std::uint64_t awake = queue.size();
      std::uint64_t previous;
      do {
        previous = awake;
        next.assign(n, 0);
        const std::uint32_t d = level + 1;
        parallel_for(n, workers, [&](std::uint64_t b, std::uint64_t e, unsigned w) {
          std::uint64_t found = 0;
          for (std::uint64_t v = b; v < e; ++v) {
            if (r.distance[v] != kUnreachedHops) continue;
            g.for_each_neighbor(static_cast<VertexId>(v), [&](VertexId u) {
              if (!front[u]) return true;
              r.parent[v] = u;
              r.distance[v] = d;
              next[v] = 1;
              ++found;
              return false;
            });
          }
          local_count[w] = found;
        });
        awake = 0;
        for (unsigned w = 0; w < workers; ++w) awake += local_count[w];
        front.swap(next);
        ++level;
      } while (awake > 0 && (awake >= previous || static_cast<double>(awake) > static_cast<double>(n) / opt.beta));
      queue.clear();
      for (std::uint64_t v = 0; v < n; ++v) {
        if (front[v]) queue.push_back(static_cast<VertexId>(v));
      }
      scout = 1;
    } else {
      edges_to_check -= scout;
      const std::uint32_t d = level + 1;
      parallel_for(queue.size(), workers, [&](std::uint64_t b, std::uint64_t e, unsigned w) {
        auto& out = local[w];
        out.clear();
        std::uint64_t degrees = 0;
        for (std::uint64_t i = b; i < e; ++i) {
          const VertexId v = queue[i];
          g.for_each_neighbor(v, [&](VertexId u) {
            std::atomic_ref<std::uint32_t> slot(r.distance[u]);
            std::uint32_t expected = kUnreachedHops;
            if (slot.load(std::memory_order_relaxed) == kUnreachedHops &&
                slot.compare_exchange_strong(expected, d, std::memory_order_relaxed)) {
              r.parent[u] = v;
              out.push_back(u);
              degrees += g.degree(u);
            }
          });
        }
        local_count[w] = degrees;
      });
      queue.clear();
      scout = 0;
      for (unsigned w = 0; w < workers; ++w) {
        queue.insert(queue.end(), local[w].begin(), local[w].end());
        scout += static_cast<std::int64_t>(local_count[w]);
      }
      ++level;
    }
  }
  return r;
}

struct PageRankOptions {
  double damping = 0.85;
  unsigned max_iterations = 100;
  double tolerance = 1e-9;  // L1 change; 0 runs exactly max_iterations
};

struct PageRankResult {
  std::vector<double> rank;
  unsigned iterations = 0;
  double last_change = 0;
};

// Pull-based PageRank; the mass of degree-0 vertices is spread uniformly.
template <class G>
PageRankResult pagerank(const G& g, const RunOptions& run = {}, const PageRankOptions& opt = {}) {
  const std::uint64_t n = g.num_vertices();
  PageRankResult r;
  if (n == 0) return r;
  const unsigned workers = run.workers();
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> degree(n);
  for (std::uint64_t v = 0; v < n; ++v) degree[v] = static_cast<double>(g.degree(static_cast<VertexId>(v)));
  r.rank.assign(n, inv_n);
  std::vector<double> next(n), contrib(n);
  std::vector<double> partial(workers);
  for (unsigned it = 0; it < opt.max_iterations; ++it) {
    double dangling = 0;
    for (std::uint64_t v = 0; v < n; ++v) {
      if (degree[v] == 0) {
        dangling += r.rank[v];
        contrib[v] = 0;
      } else {
        contrib[v] = r.rank[v] / degree[v];
      }
    }
    const double base = (1.0 - opt.damping) * inv_n + opt.damping * dangling * inv_n;
    parallel_for(n, workers, [&](std::uint64_t b, std::uint64_t e, unsigned w) {
      double change = 0;
      for (std::uint64_t v = b; v < e; ++v) {
        double sum = 0;
        g.for_each_neighbor(static_cast<VertexId>(v), [&](VertexId u) { sum += contrib[u]; });
        next[v] = base + opt.damping * sum;
        change += std::fabs(next[v] - r.rank[v]);
      }
      partial[w] = change;
    });
    r.rank.swap(next);
    r.last_change = 0;
    for (unsigned w = 0; w < workers; ++w) r.last_change += partial[w];
    r.iterations = it + 1;
    if (opt.tolerance > 0 && r.last_change < opt.tolerance) break;
  }
  return r;
}

// Shiloach-Vishkin hooking onto the smaller label plus pointer jumping; the
// final label of each vertex is the minimum id of its component.
template <class G>
std::vector<VertexId> connected_components(const G& g, const RunOptions& run = {}) {
  const std::uint64_t n = g.num_vertices();
  const unsigned workers = run.workers();
  std::vector<VertexId> comp(n);
  for (std::uint64_t v = 0; v < n; ++v) comp[v] = static_cast<VertexId>(v);
  auto at = [&](std::uint64_t i) { return std::atomic_ref<VertexId>(comp[i]); };
  std::atomic<bool> change = true;
  while (change.load()) {
    change = false;
    parallel_for(n, workers, [&](std::uint64_t b, std::uint64_t e, unsigned) {
      for (std::uint64_t v = b; v < e; ++v) {
        g.for_each_neighbor(static_cast<VertexId>(v), [&](VertexId u) {
          const VertexId cv = at(v).load(std::memory_order_relaxed);
          const VertexId cu = at(u).load(std::memory_order_relaxed);
          if (cv == cu) return;
          const VertexId high = std::max(cv, cu);
          const VertexId low = std::min(cv, cu);
          if (at(high).load(std::memory_order_relaxed) == high) {
            at(high).store(low, std::memory_order_relaxed);
            change.store(true, std::memory_order_relaxed);
          }
        });
      }
    });
    parallel_for(n, workers, [&](std::uint64_t b, std::uint64_t e, unsigned) {
      for (std::uint64_t v = b; v < e; ++v) {
        while (true) {
          const VertexId c = at(v).load(std::memory_order_relaxed);
          const VertexId cc = at(c).load(std::memory_order_relaxed);
          if (c == cc) break;
          at(v).store(cc, std::memory_order_relaxed);
        }
      }
    });
  }
  return comp;
}

struct SsspOptions {
  std::uint64_t delta = 0;  // 0 selects max(1, max weight)
};

// Delta-stepping: per bucket, repeated light-edge rounds, then one
// heavy-edge round over the settled vertices. Candidate relaxations are
// collected per worker and applied in worker order.
template <class G>
std::vector<std::uint64_t> sssp(const G& g, VertexId source, const RunOptions& run = {},
                                const SsspOptions& opt = {}) {
  if (!g.weighted()) throw DomainError("sssp needs a weighted graph");
  const std::uint64_t n = g.num_vertices();
  if (source >= n) throw DomainError("sssp source " + std::to_string(source) + " out of range");
  const std::uint64_t delta = opt.delta ? opt.delta : std::max<std::uint64_t>(1, g.max_weight());
  const unsigned workers = run.workers();
  std::vector<std::uint64_t> dist(n, kUnreachedDistance);
  std::vector<std::vector<VertexId>> buckets(1);
  dist[source] = 0;
  buckets[0].push_back(source);
  std::vector<std::vector<std::pair<VertexId, std::uint64_t>>> found(workers);
  std::vector<std::uint8_t> settled(n, 0);

  auto relax = [&](const std::vector<VertexId>& items, bool light) {
    parallel_for(items.size(), workers, [&](std::uint64_t b, std::uint64_t e, unsigned w) {
      auto& out = found[w];
      out.clear();
      for (std::uint64_t i = b; i < e; ++i) {
        const VertexId v = items[i];
        const std::uint64_t dv = dist[v];
        g.for_each_weighted_neighbor(v, [&](VertexId u, Weight wt) {
          if ((wt <= delta) != light) return;
          const std::uint64_t nd = dv + wt;
          if (nd < dist[u]) out.emplace_back(u, nd);
        });
      }
    });
    for (unsigned w = 0; w < workers; ++w) {
      for (auto [u, nd] : found[w]) {
        if (nd < dist[u]) {
          dist[u] = nd;
          const std::uint64_t idx = nd / delta;
          if (idx >= buckets.size()) buckets.resize(idx + 1);
          buckets[idx].push_back(u);
        }
      }
    }
  };

  std::vector<VertexId> current, done;
  for (std::uint64_t idx = 0; idx < buckets.size(); ++idx) {
    done.clear();
    while (!buckets[idx].empty()) {
      current.clear();
      for (VertexId v : buckets[idx]) {
        if (dist[v] / delta == idx && !settled[v]) {
          settled[v] = 1;
          current.push_back(v);
        }
      }
      buckets[idx].clear();
      for (VertexId v : current) settled[v] = 0;
      done.insert(done.end(), current.begin(), current.end());
      relax(current, true);
    }
    std::sort(done.begin(), done.end());
    done.erase(std::unique(done.begin(), done.end()), done.end());
    relax(done, false);
    std::vector<VertexId>().swap(buckets[idx]);
  }
  return dist;
}

// Orients every edge from lower to higher (degree, id) rank and counts
// common out-neighbors with sorted intersections.
template <class G>
std::uint64_t triangle_count(const G& g, const RunOptions& run = {}) {
  const std::uint64_t n = g.num_vertices();
  const unsigned workers = run.workers();
  std::vector<std::uint64_t> degree(n);
  for (std::uint64_t v = 0; v < n; ++v) degree[v] = g.degree(static_cast<VertexId>(v));
  auto before = [&](VertexId a, VertexId b) {
    return degree[a] != degree[b] ? degree[a] < degree[b] : a < b;
  };
  std::vector<std::uint64_t> offsets(n + 1, 0);
  std::vector<VertexId> out;
  for (std::uint64_t v = 0; v < n; ++v) {
    g.for_each_neighbor(static_cast<VertexId>(v), [&](VertexId u) {
      if (before(static_cast<VertexId>(v), u)) out.push_back(u);
    });
    offsets[v + 1] = out.size();
  }
  std::vector<std::uint64_t> partial(workers, 0);
  parallel_for(n, workers, [&](std::uint64_t b, std::uint64_t e, unsigned w) {
    std::uint64_t count = 0;
    for (std::uint64_t v = b; v < e; ++v) {
      for (std::uint64_t i = offsets[v]; i < offsets[v + 1]; ++i) {
        const VertexId u = out[i];
        std::uint64_t p = offsets[v], q = offsets[u];
        const std::uint64_t pe = offsets[v + 1], qe = offsets[u + 1];
        while (p < pe && q < qe) {
          if (out[p] < out[q]) {
            ++p;
          } else if (out[q] < out[p]) {
            ++q;
          } else {
            ++count;
            ++p;
            ++q;
          }
        }
      }
    }
    partial[w] = count;
  });
  std::uint64_t total = 0;
  for (std::uint64_t c : partial) total += c;
  return total;
}

}  // namespace loggraph
