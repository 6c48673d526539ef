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
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "loggraph/graph.hpp"

namespace loggraph {

AdjacencyGraph::AdjacencyGraph(std::vector<EdgeIndex> offsets, std::vector<VertexId> neighbors,
                               std::vector<Weight> weights, bool weighted)
    : offsets_(std::move(offsets)),
      neighbors_(std::move(neighbors)),
      weights_(std::move(weights)),
      weighted_(weighted || !weights_.empty()) {
  if (offsets_.empty()) offsets_.push_back(0);
  if (weighted_ && weights_.size() != neighbors_.size()) {
    throw DomainError("weight array length differs from neighbor array length");
  }
  for (Weight w : weights_) max_weight_ = std::max(max_weight_, w);
  if (std::string problem = validate(*this); !problem.empty()) throw DomainError(problem);
}

std::string validate(const AdjacencyGraph& g) {
  const auto& off = g.offsets();
  const auto& nbr = g.neighbor_array();
  const auto& wts = g.weight_array();
  const std::uint64_t n = off.size() - 1;
  if (off.front() != 0) return "offsets[0] != 0";
  if (off.back() != nbr.size()) return "offsets[n] != neighbor count";
  if (nbr.size() % 2 != 0) return "odd number of adjacency entries";
  for (std::uint64_t v = 0; v < n; ++v) {
    if (off[v] > off[v + 1]) return "offsets not monotone at " + std::to_string(v);
    for (EdgeIndex e = off[v]; e < off[v + 1]; ++e) {
      if (nbr[e] >= n) return "neighbor id out of range at vertex " + std::to_string(v);
      if (nbr[e] == v) return "self-loop at vertex " + std::to_string(v);
      if (e > off[v] && nbr[e - 1] >= nbr[e]) {
        return "neighborhood of " + std::to_string(v) + " not strictly ascending";
      }
    }
  }
  for (std::uint64_t v = 0; v < n; ++v) {
    for (EdgeIndex e = off[v]; e < off[v + 1]; ++e) {
      const VertexId u = nbr[e];
      auto first = nbr.begin() + static_cast<std::ptrdiff_t>(off[u]);
      auto last = nbr.begin() + static_cast<std::ptrdiff_t>(off[u + 1]);
      auto it = std::lower_bound(first, last, static_cast<VertexId>(v));
      if (it == last || *it != v) {
        return "asymmetric edge " + std::to_string(v) + "->" + std::to_string(u);
      }
      if (!wts.empty() && wts[static_cast<std::size_t>(it - nbr.begin())] != wts[e]) {
        return "asymmetric weight on edge " + std::to_string(v) + "-" + std::to_string(u);
      }
    }
  }
  return {};
}

AdjacencyGraph AdjacencyGraph::from_edges(std::uint64_t n,
                                          std::span<const std::pair<VertexId, VertexId>> edges,
                                          std::span<const Weight> weights, bool weighted) {
  const bool has_weights = !weights.empty();
  if (has_weights && weights.size() != edges.size()) {
    throw DomainError("weights must be parallel to edges");
  }
  std::vector<EdgeIndex> count(n + 1, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw DomainError("edge endpoint out of range");
    if (u == v) continue;
    ++count[u + 1];
    ++count[v + 1];
  }
  std::partial_sum(count.begin(), count.end(), count.begin());
  std::vector<std::pair<VertexId, Weight>> slots(count.back());
  std::vector<EdgeIndex> cursor(count.begin(), count.end() - 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u == v) continue;
    const Weight w = has_weights ? weights[i] : 0;
    slots[cursor[u]++] = {v, w};
    slots[cursor[v]++] = {u, w};
  }

  AdjacencyGraph g;
  g.offsets_.assign(n + 1, 0);
  g.neighbors_.reserve(slots.size());
  if (has_weights) g.weights_.reserve(slots.size());
  for (std::uint64_t v = 0; v < n; ++v) {
    auto first = slots.begin() + static_cast<std::ptrdiff_t>(count[v]);
    auto last = slots.begin() + static_cast<std::ptrdiff_t>(count[v + 1]);
    std::sort(first, last);  // (id, weight): the first of a run has the minimum weight
    for (auto it = first; it != last; ++it) {
      if (it != first && std::prev(it)->first == it->first) continue;
      g.neighbors_.push_back(it->first);
      if (has_weights) {
        g.weights_.push_back(it->second);
        g.max_weight_ = std::max(g.max_weight_, it->second);
      }
    }
    g.offsets_[v + 1] = g.neighbors_.size();
  }
  g.neighbors_.shrink_to_fit();
  g.weights_.shrink_to_fit();
  g.weighted_ = weighted || has_weights;
  return g;
}

namespace {

bool parse_u64(std::string_view token, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

AdjacencyGraph load_edge_list(std::istream& in, const LoadOptions& options) {
  std::unordered_map<std::uint64_t, VertexId> ids;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<Weight> weights;
  auto compact = [&](std::uint64_t raw) {
    auto [it, inserted] = ids.try_emplace(raw, static_cast<VertexId>(ids.size()));
    if (inserted && ids.size() > std::numeric_limits<VertexId>::max()) {
      throw CapacityError("too many distinct vertex ids");
    }
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    while (!view.empty() && (view.back() == '\r' || view.back() == ' ' || view.back() == '\t')) {
      view.remove_suffix(1);
    }
    std::size_t start = view.find_first_not_of(" \t");
    if (start == std::string_view::npos) continue;
    view.remove_prefix(start);
    if (view.front() == '#') continue;

    std::string_view tokens[4];
    std::size_t count = 0;
    while (!view.empty()) {
      std::size_t end = view.find_first_of(" \t");
      if (count == 4) throw ParseError(lineno, "too many fields");
      tokens[count++] = view.substr(0, end);
      if (end == std::string_view::npos) break;
      view.remove_prefix(end);
      view.remove_prefix(std::min(view.find_first_not_of(" \t"), view.size()));
    }
    if (count < 2 || count > 3) {
      throw ParseError(lineno, "expected \"u v\" or \"u v w\", got " + std::to_string(count) +
                                   " field(s)");
    }
    std::uint64_t u = 0, v = 0, w = 0;
    if (!parse_u64(tokens[0], u) || !parse_u64(tokens[1], v)) {
      throw ParseError(lineno, "vertex ids must be nonnegative integers");
    }
    if (options.weighted) {
      if (count != 3) throw ParseError(lineno, "missing edge weight");
      if (!parse_u64(tokens[2], w) || w > std::numeric_limits<Weight>::max()) {
        throw ParseError(lineno, "weight must be a nonnegative 32-bit integer");
      }
    } else if (count == 3 && !parse_u64(tokens[2], w)) {
      throw ParseError(lineno, "weight must be a nonnegative integer");
    }
    const VertexId cu = compact(u);
    const VertexId cv = compact(v);
    edges.emplace_back(cu, cv);
    if (options.weighted) weights.push_back(static_cast<Weight>(w));
  }
  return AdjacencyGraph::from_edges(ids.size(), edges, weights, options.weighted);
}

AdjacencyGraph load_edge_list_string(const std::string& text, const LoadOptions& options) {
  std::istringstream in(text);
  return load_edge_list(in, options);
}

}  // namespace loggraph
