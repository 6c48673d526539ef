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


// Random offset_of lookups per offset structure.

#include <benchmark/benchmark.h>

#include <map>
#include <vector>

#include "loggraph/compressed_graph.hpp"
#include "loggraph/random.hpp"

namespace loggraph {
namespace {

const AdjacencyGraph& graph() {
  static const AdjacencyGraph g = generate(Kronecker{16, 16, 1});
  return g;
}

const CompressedGraph& compressed(OffsetKind kind) {
  static std::map<OffsetKind, CompressedGraph> cache;
  auto it = cache.find(kind);
  if (it == cache.end()) {
    BuildOptions b;
    b.offsets = kind;
    b.adjacency = parse_adjacency_scheme("varint-gap");
    it = cache.emplace(kind, CompressedGraph::build(graph(), b)).first;
  }
  return it->second;
}

void BM_OffsetOf(benchmark::State& state) {
  const auto kind = static_cast<OffsetKind>(state.range(0));
  const OffsetStructure& o = compressed(kind).offsets();
  Rng rng(1);
  std::vector<VertexId> queries(1000);
  for (auto& v : queries) v = static_cast<VertexId>(rng.below(o.num_vertices()));
  for (auto _ : state) {
    for (VertexId v : queries) benchmark::DoNotOptimize(o.offset_of(v));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(queries.size()));
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_OffsetOf)->DenseRange(0, 5);

}  // namespace
}  // namespace loggraph
