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


// Neighborhood decoding and BFS over compressed and uncompressed graphs.

#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "loggraph/algorithms.hpp"
#include "loggraph/compressed_graph.hpp"

namespace loggraph {
namespace {

const AdjacencyGraph& graph() {
  static const AdjacencyGraph g = generate(Kronecker{16, 16, 2});
  return g;
}

const char* const kSchemes[] = {"global", "global-gap", "local-gap", "varint-gap", "varint-full"};

const CompressedGraph& compressed(int scheme) {
  static std::map<int, CompressedGraph> cache;
  auto it = cache.find(scheme);
  if (it == cache.end()) {
    BuildOptions b;
    b.adjacency = parse_adjacency_scheme(kSchemes[scheme]);
    b.permuter = PermuterKind::kDegreeMin;
    b.offsets = b.adjacency.varint() ? OffsetKind::kBvSparse : OffsetKind::kPtrLogn;
    it = cache.emplace(scheme, CompressedGraph::build(graph(), b)).first;
  }
  return it->second;
}

void BM_ScanUncompressed(benchmark::State& state) {
  const auto& g = graph();
  for (auto _ : state) {
    std::uint64_t sum = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) g.for_each_neighbor(v, [&](VertexId u) { sum += u; });
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * g.num_edges()));
}
BENCHMARK(BM_ScanUncompressed);

void BM_ScanCompressed(benchmark::State& state) {
  const auto& g = compressed(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::uint64_t sum = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) g.for_each_neighbor(v, [&](VertexId u) { sum += u; });
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * g.num_edges()));
  state.SetLabel(kSchemes[state.range(0)]);
}
BENCHMARK(BM_ScanCompressed)->DenseRange(0, 4);

void BM_BfsUncompressed(benchmark::State& state) {
  const auto& g = graph();
  for (auto _ : state) benchmark::DoNotOptimize(bfs(g, 0, RunOptions{}).distance.data());
}
BENCHMARK(BM_BfsUncompressed)->Unit(benchmark::kMillisecond);

void BM_BfsCompressed(benchmark::State& state) {
  const auto& g = compressed(static_cast<int>(state.range(0)));
  const VertexId source = (*g.permutation())(0);
  for (auto _ : state) benchmark::DoNotOptimize(bfs(g, source, RunOptions{}).distance.data());
  state.SetLabel(kSchemes[state.range(0)]);
}
BENCHMARK(BM_BfsCompressed)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace loggraph
