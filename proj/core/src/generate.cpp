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

#include <cmath>
#include <numeric>
#include <random>

#include "loggraph/graph.hpp"
#include "loggraph/random.hpp"

namespace loggraph {
namespace {

struct EdgeBuffer {
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<Weight> weights;
};

void add_edge(EdgeBuffer& buf, Rng& rng, VertexId u, VertexId v, bool weighted,
              Weight max_weight) {
  buf.edges.emplace_back(u, v);
  if (weighted) buf.weights.push_back(static_cast<Weight>(1 + rng.below(max_weight)));
}

// Geometric skipping over the pairs (w < v) in row-major order, so the cost
// is proportional to the number of sampled edges.
void erdos_renyi(const ErdosRenyi& spec, bool weighted, Weight max_weight, EdgeBuffer& buf) {
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw DomainError("edge probability must be in [0, 1]");
  if (spec.n > std::numeric_limits<VertexId>::max()) throw CapacityError("too many vertices");
  if (spec.n < 2 || spec.p == 0.0) return;
  Rng rng(spec.seed);
  if (spec.p == 1.0) {
    for (std::uint64_t v = 1; v < spec.n; ++v) {
      for (std::uint64_t w = 0; w < v; ++w) {
        add_edge(buf, rng, static_cast<VertexId>(v), static_cast<VertexId>(w), weighted,
                 max_weight);
      }
    }
    return;
  }
  const double log_q = std::log1p(-spec.p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto n = static_cast<std::int64_t>(spec.n);
  while (v < n) {
    const double r = rng.uniform();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) {
      add_edge(buf, rng, static_cast<VertexId>(v), static_cast<VertexId>(w), weighted, max_weight);
    }
  }
}

void kronecker(const Kronecker& spec, bool weighted, Weight max_weight, EdgeBuffer& buf,
               std::uint64_t& n) {
  if (spec.scale < 1) throw DomainError("kronecker scale must be >= 1");
  if (spec.edge_factor < 1) throw DomainError("kronecker edge factor must be >= 1");
  if (spec.scale > 31) throw CapacityError("kronecker scale exceeds 32-bit vertex ids");
  const double d = 1.0 - spec.a - spec.b - spec.c;
  if (spec.a < 0 || spec.b < 0 || spec.c < 0 || d < -1e-12) {
    throw DomainError("kronecker initiator probabilities must be nonnegative and sum to <= 1");
  }
  n = std::uint64_t{1} << spec.scale;
  const std::uint64_t samples = n * spec.edge_factor;
  if (samples > (std::uint64_t{1} << 36)) throw CapacityError("kronecker edge count too large");
  Rng rng(spec.seed);
  buf.edges.reserve(samples);
  const double ab = spec.a + spec.b;
  const double abc = ab + spec.c;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::uint64_t u = 0, v = 0;
    for (unsigned level = 0; level < spec.scale; ++level) {
      const double r = rng.uniform();
      const unsigned row = r >= ab ? 1 : 0;
      const unsigned col = (r >= spec.a && r < ab) || r >= abc ? 1 : 0;
      u = (u << 1) | row;
      v = (v << 1) | col;
    }
    add_edge(buf, rng, static_cast<VertexId>(u), static_cast<VertexId>(v), weighted, max_weight);
  }
  // Scramble ids so that vertex labels carry no degree or locality signal.
  std::vector<VertexId> relabel(n);
  std::iota(relabel.begin(), relabel.end(), VertexId{0});
  rng.shuffle(relabel);
  for (auto& [u, v] : buf.edges) {
    u = relabel[u];
    v = relabel[v];
  }
}

void two_community(const TwoCommunity& spec, bool weighted, Weight max_weight, EdgeBuffer& buf) {
  if (!(spec.p_in >= 0 && spec.p_in <= 1 && spec.p_out >= 0 && spec.p_out <= 1)) {
    throw DomainError("community probabilities must be in [0, 1]");
  }
  Rng rng(spec.seed);
  std::vector<VertexId> label(spec.n);
  std::iota(label.begin(), label.end(), VertexId{0});
  rng.shuffle(label);
  const std::uint64_t half = spec.n / 2;
  for (std::uint64_t u = 0; u < spec.n; ++u) {
    for (std::uint64_t v = u + 1; v < spec.n; ++v) {
      const bool same = (u < half) == (v < half);
      if (rng.uniform() < (same ? spec.p_in : spec.p_out)) {
        add_edge(buf, rng, label[u], label[v], weighted, max_weight);
      }
    }
  }
}

}  // namespace

AdjacencyGraph generate(const GraphSpec& spec) {
  if (spec.weighted && spec.max_weight == 0) throw DomainError("max_weight must be >= 1");
  EdgeBuffer buf;
  std::uint64_t n = 0;
  if (const auto* er = std::get_if<ErdosRenyi>(&spec.generator)) {
    n = er->n;
    erdos_renyi(*er, spec.weighted, spec.max_weight, buf);
  } else if (const auto* kr = std::get_if<Kronecker>(&spec.generator)) {
    kronecker(*kr, spec.weighted, spec.max_weight, buf, n);
  } else {
    const auto& tc = std::get<TwoCommunity>(spec.generator);
    n = tc.n;
    two_community(tc, spec.weighted, spec.max_weight, buf);
  }
  return AdjacencyGraph::from_edges(n, buf.edges, buf.weights, spec.weighted);
}

}  // namespace loggraph
