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


// loggraph command-line tool: generate, ingest, compress, run, bench-offsets,
// estimate, stats. Exit codes: 0 ok, 2 input, 3 config, 4 internal.

#include <zlib.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "loggraph/algorithms.hpp"
#include "loggraph/analysis.hpp"
#include "loggraph/compressed_graph.hpp"
#include "loggraph/container.hpp"
#include "loggraph/graph.hpp"
#include "loggraph/random.hpp"

namespace {

using namespace loggraph;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kExitInput = 2;
constexpr int kExitConfig = 3;
constexpr int kExitInternal = 4;

class InputError : public Error {
 public:
  using Error::Error;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_text(const std::string& path) {
  if (ends_with(path, ".gz")) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (!f) throw InputError("cannot open " + path);
    std::string text;
    char buf[1 << 16];
    int got;
    while ((got = gzread(f, buf, sizeof buf)) > 0) text.append(buf, static_cast<std::size_t>(got));
    const bool failed = got < 0;
    gzclose(f);
    if (failed) throw InputError("corrupt gzip stream in " + path);
    return text;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Container load_container(const std::string& path) {
  std::vector<std::uint8_t> bytes;
  try {
    bytes = read_file(path);
  } catch (const DecodeError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return decode_container(bytes);
}

void save(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  try {
    write_file(path, bytes);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

// FNV-1a over the little-endian bytes of each value.
template <class T>
std::string digest(const std::vector<T>& values) {
  std::uint64_t h = 1469598103934665603ull;
  for (T v : values) {
    const auto x = static_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xFF;
      h *= 1099511628211ull;
    }
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

// ---- ingest ---------------------------------------------------------------

struct IngestArgs {
  std::string input, output;
  bool weighted = false;
  std::string format = "edge-list";
};

int cmd_ingest(const IngestArgs& a) {
  if (a.format != "edge-list") throw ConfigError("unsupported format " + a.format);
  const std::string text = read_text(a.input);
  LoadOptions lo;
  lo.weighted = a.weighted;
  const AdjacencyGraph g = load_edge_list_string(text, lo);
  save(a.output, encode_container(g));
  std::cout << "n=" << g.num_vertices() << " m=" << g.num_edges() << " weighted=" << g.weighted() << "\n";
  return 0;
}

// ---- generate -----------------------------------------------------------

struct GenerateArgs {
  std::string model = "kronecker", output;
  std::uint64_t n = 1024;
  double p = 0.01;
  unsigned scale = 10, edge_factor = 16;
  bool weighted = false;
  Weight max_weight = 255;
  std::uint64_t seed = 1;
};

int cmd_generate(const GenerateArgs& a) {
  GraphSpec spec;
  if (a.model == "er") {
    spec.generator = ErdosRenyi{a.n, a.p, a.seed};
  } else if (a.model == "kronecker") {
    spec.generator = Kronecker{a.scale, a.edge_factor, a.seed};
  } else {
    throw ConfigError("unknown generator " + a.model + " (er, kronecker)");
  }
  spec.weighted = a.weighted;
  spec.max_weight = a.max_weight;
  const AdjacencyGraph g = generate(spec);
  std::ofstream out(a.output, std::ios::binary);
  if (!out) throw InputError("cannot write " + a.output);
  out << "# n=" << g.num_vertices() << " m=" << g.num_edges() << "\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto nbrs = g.neighbors(v);
    const auto wts = g.weights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] < v) continue;
      out << v << ' ' << nbrs[i];
      if (g.weighted()) out << ' ' << wts[i];
      out << '\n';
    }
  }
  if (!out) throw InputError("cannot write " + a.output);
  return 0;
}

// ---- compress -------------------------------------------------------------

struct CompressArgs {
  std::string input, output;
  std::string offsets = "ptr64", adjacency = "global", permuter = "identity", weights = "auto";
  unsigned brb_depth = 0;
  double imbalance = 0.001;
  unsigned block_bits = 0;
  std::uint64_t seed = 1;
  std::uint64_t interleave_period = InterleavedBitVector::kDefaultPeriod;
};

WeightMode resolve_weights(const std::string& name, const AdjacencyGraph& g, const TransformScheme& s) {
  if (name == "none") return WeightMode::kNone;
  if (name == "global") return WeightMode::kGlobal;
  if (name == "local") return WeightMode::kLocal;
  if (name != "auto") throw ConfigError("unknown weight mode " + name);
  if (!g.weighted() || s.kind != TransformKind::kFixed) return WeightMode::kNone;
  return s.fine.local_ids() ? WeightMode::kLocal : WeightMode::kGlobal;
}

int cmd_compress(const CompressArgs& a) {
  Container c = load_container(a.input);
  const auto* g = std::get_if<AdjacencyGraph>(&c.graph);
  if (!g) throw InputError(a.input + " is already compressed");
  BuildOptions b;
  b.offsets = parse_offset_kind(a.offsets);
  b.adjacency = parse_adjacency_scheme(a.adjacency, a.brb_depth);
  b.permuter = parse_permuter(a.permuter);
  b.brb_depth = a.brb_depth;
  if (b.permuter == PermuterKind::kBrb && a.brb_depth == 0) throw ConfigError("--permuter brb needs --brb-depth");
  b.adjacency.fine.weight_mode = resolve_weights(a.weights, *g, b.adjacency);
  b.block_bits = a.block_bits;
  b.imbalance = a.imbalance;
  b.seed = a.seed;
  b.interleave_period = a.interleave_period;
  check_compatibility(b);

  const auto start = Clock::now();
  const CompressedGraph cg = CompressedGraph::build(*g, b);
  const double build_seconds = seconds_since(start);
  const std::string report = cg.size_report().csv();
  save(a.output, encode_container(cg, report));
  std::cout << report;
  std::cerr << "preprocessing_seconds," << std::fixed << std::setprecision(6) << build_seconds << "\n";
  return 0;
}

// ---- run ------------------------------------------------------------------

struct RunArgs {
  std::string input, alg;
  VertexId source = 0;
  unsigned threads = 0;
  bool sequential = false;
  unsigned iterations = 100;
  double tolerance = 1e-9;
  std::uint64_t delta = 0;
};

unsigned resolve_threads(unsigned flag) { return flag ? flag : default_threads(); }

template <class G>
json run_algorithm(const G& g, const std::optional<Permutation>& p, const RunArgs& a, const RunOptions& run) {
  const std::uint64_t n = g.num_vertices();
  auto map = [&](VertexId v) { return p ? (*p)(v) : v; };
  json out;
  out["alg"] = a.alg;
  out["n"] = n;
  out["m"] = g.num_edges();
  out["threads"] = run.workers();
  const auto start = Clock::now();
  if (a.alg == "bfs") {
    if (a.source >= n) throw DomainError("source out of range");
    const auto r = bfs(g, map(a.source), run);
    const double t = seconds_since(start);
    std::vector<std::uint32_t> d(n);
    std::uint64_t reached = 0;
    for (VertexId v = 0; v < n; ++v) {
      d[v] = r.distance[map(v)];
      reached += d[v] != kUnreachedHops;
    }
    out["reached"] = reached;
    out["digest"] = digest(d);
    out["wall_seconds"] = t;
  } else if (a.alg == "sssp") {
    if (a.source >= n) throw DomainError("source out of range");
    SsspOptions so;
    so.delta = a.delta;
    const auto r = sssp(g, map(a.source), run, so);
    const double t = seconds_since(start);
    std::vector<std::uint64_t> d(n);
    for (VertexId v = 0; v < n; ++v) d[v] = r[map(v)];
    out["digest"] = digest(d);
    out["wall_seconds"] = t;
  } else if (a.alg == "cc") {
    const auto r = connected_components(g, run);
    const double t = seconds_since(start);
    // Relabel each component by its minimum original id.
    std::vector<VertexId> first(n, static_cast<VertexId>(n));
    std::vector<VertexId> label(n);
    for (VertexId v = 0; v < n; ++v) {
      VertexId& f = first[r[map(v)]];
      if (f == n) f = v;
      label[v] = f;
    }
    std::uint64_t components = 0;
    for (VertexId v = 0; v < n; ++v) components += label[v] == v;
    out["components"] = components;
    out["digest"] = digest(label);
    out["wall_seconds"] = t;
  } else if (a.alg == "pr") {
    PageRankOptions po;
    po.max_iterations = a.iterations;
    po.tolerance = a.tolerance;
    const auto r = pagerank(g, run, po);
    const double t = seconds_since(start);
    // Ranks quantized to 1e-12 so summation-order rounding cannot change
    // the digest.
    double l1 = 0;
    std::vector<std::int64_t> q(n);
    for (VertexId v = 0; v < n; ++v) {
      l1 += std::abs(r.rank[map(v)]);
      q[v] = std::llround(r.rank[map(v)] * 1e12);
    }
    out["iterations"] = r.iterations;
    out["rank_l1"] = l1;
    out["digest"] = digest(q);
    out["wall_seconds"] = t;
  } else if (a.alg == "tc") {
    const auto r = triangle_count(g, run);
    const double t = seconds_since(start);
    out["triangles"] = r;
    out["digest"] = std::to_string(r);
    out["wall_seconds"] = t;
  } else {
    throw ConfigError("unknown algorithm " + a.alg + " (bfs, pr, cc, sssp, tc)");
  }
  return out;
}

int cmd_run(const RunArgs& a) {
  const Container c = load_container(a.input);
  RunOptions run;
  run.threads = resolve_threads(a.threads);
  run.sequential = a.sequential;
  json out = std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, CompressedGraph>) {
          return run_algorithm(g, g.permutation(), a, run);
        } else {
          return run_algorithm(g, std::nullopt, a, run);
        }
      },
      c.graph);
  std::cout << out.dump() << "\n";
  return 0;
}

// ---- bench-offsets --------------------------------------------------------

struct BenchArgs {
  std::string input;
  std::vector<unsigned> threads{1, 2, 4, 8};
  std::uint64_t queries = 1000;
  std::uint64_t seed = 1;
};

int cmd_bench_offsets(const BenchArgs& a) {
  const Container c = load_container(a.input);
  const auto* cg = std::get_if<CompressedGraph>(&c.graph);
  if (!cg) throw InputError(a.input + " is not a compressed container");
  const OffsetStructure& o = cg->offsets();
  const std::uint64_t n = o.num_vertices();
  if (n == 0) throw InputError("empty graph");
  std::cout << "structure,threads,queries_per_thread,mean_ns,median_ns,checksum\n";
  for (unsigned t : a.threads) {
    if (t == 0) throw ConfigError("thread count must be positive");
    std::vector<std::vector<double>> lat(t);
    std::vector<std::uint64_t> sums(t);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < t; ++w) {
      pool.emplace_back([&, w] {
        Rng rng(a.seed * 1000003 + w);
        std::vector<VertexId> q(a.queries);
        for (auto& v : q) v = static_cast<VertexId>(rng.below(n));
        auto& out = lat[w];
        out.reserve(a.queries);
        std::uint64_t sum = 0;
        for (VertexId v : q) {
          const auto s = Clock::now();
          sum += o.offset_of(v);
          out.push_back(std::chrono::duration<double, std::nano>(Clock::now() - s).count());
        }
        sums[w] = sum;
      });
    }
    for (auto& th : pool) th.join();
    std::vector<double> all;
    for (auto& l : lat) all.insert(all.end(), l.begin(), l.end());
    std::sort(all.begin(), all.end());
    const double mean = std::accumulate(all.begin(), all.end(), 0.0) / static_cast<double>(all.size());
    const double median = all.empty() ? 0 : all[all.size() / 2];
    std::cout << to_string(o.kind()) << ',' << t << ',' << a.queries << ',' << std::fixed << std::setprecision(2)
              << mean << ',' << median << ',' << std::accumulate(sums.begin(), sums.end(), std::uint64_t{0})
              << "\n";
  }
  return 0;
}

// ---- estimate -------------------------------------------------------------

struct EstimateArgs {
  std::string model;
  double n = 1 << 20, p = 0.001, m = 0, alpha = 1, beta = 2.5, max_weight = 0;
  double word_bits = 64, block_bits = 64;
  std::vector<double> ns;
};

int cmd_estimate(const EstimateArgs& a) {
  std::cout << std::setprecision(17);
  if (a.model == "er") {
    const ErSizes s = er_expected_sizes(a.n, a.p, a.max_weight);
    std::cout << "n,p,adjacency_bits,offsets_bits\n" << a.n << ',' << a.p << ',' << s.adjacency_bits << ','
              << s.offsets_bits << "\n";
  } else if (a.model == "pl") {
    const PowerLawSizes s = pl_expected_size(a.n, a.alpha, a.beta, a.max_weight);
    std::cout << "n,alpha,beta,max_degree,edges,edges_direct_sum,adjacency_bits,offsets_bits\n"
              << a.n << ',' << a.alpha << ',' << a.beta << ',' << s.max_degree << ',' << s.edges << ','
              << pl_edges_direct_sum(a.n, a.alpha, a.beta) << ',' << s.adjacency_bits << ',' << s.offsets_bits
              << "\n";
  } else if (a.model == "bounds") {
    const LowerBounds b = lower_bounds(a.n, a.m, std::max(1.0, a.max_weight), a.word_bits, a.block_bits);
    std::cout << "component,bits,bits_ceil\n"
              << "vertex_id," << b.vertex_id << ',' << b.vertex_id_ceil() << "\n"
              << "offset," << b.offset << ',' << b.offset_ceil() << "\n"
              << "weight," << b.weight << ',' << b.weight_ceil() << "\n"
              << "bitvector," << b.bitvector << ',' << b.bitvector_ceil() << "\n"
              << "graph," << b.graph << ',' << b.graph_ceil() << "\n"
              << "adjacency_array," << b.adjacency_array_bits << ',' << b.adjacency_array_bits << "\n";
  } else if (a.model == "theory") {
    std::vector<double> ns = a.ns;
    if (ns.empty()) {
      for (double x = 1 << 10; x <= (1 << 26); x *= 4) ns.push_back(x);
    }
    std::cout << theory_csv(theory_curves(ns, a.p, a.alpha, a.beta, a.max_weight));
  } else {
    throw ConfigError("unknown model " + a.model + " (er, pl, bounds, theory)");
  }
  return 0;
}

// ---- stats ----------------------------------------------------------------

int cmd_stats(const std::string& input) {
  const Container c = load_container(input);
  json out;
  out["kind"] = c.header.kind == ContainerKind::kAdjacency ? "adjacency" : "compressed";
  out["n"] = c.header.n;
  out["m"] = c.header.m;
  out["weighted"] = (c.header.flags & ContainerFlag::kWeighted) != 0;
  if (const auto* cg = std::get_if<CompressedGraph>(&c.graph)) {
    const SizeReport r = cg->size_report();
    out["offsets"] = std::string(to_string(cg->offset_kind()));
    out["adjacency"] = to_string(cg->scheme());
    out["permuted"] = cg->permutation().has_value();
    out["offsets_bits"] = r.offsets_bits;
    out["payload_bits"] = r.payload_bits;
    out["headers_bits"] = r.headers_bits;
    out["metadata_bits"] = r.metadata_bits;
    out["total_bits"] = r.total_bits();
    out["csr_baseline_bits"] = r.csr_baseline_bits;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"loggraph: log-size graph compression"};
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* ci = app.add_subcommand("ingest", "edge list (optionally .gz) to adjacency container");
  ci->add_option("input", ingest.input, "edge list path")->required();
  ci->add_option("-o,--output", ingest.output, "container path")->required();
  ci->add_option("--format", ingest.format, "input format")->capture_default_str();
  ci->add_flag("--weighted", ingest.weighted, "third column holds integer weights");

  GenerateArgs gen;
  auto* cg = app.add_subcommand("generate", "write a seeded random edge list");
  cg->add_option("--model", gen.model, "er, kronecker")->capture_default_str();
  cg->add_option("-o,--output", gen.output)->required();
  cg->add_option("--n", gen.n, "er vertex count")->capture_default_str();
  cg->add_option("--p", gen.p, "er edge probability")->capture_default_str();
  cg->add_option("--scale", gen.scale, "kronecker scale")->capture_default_str();
  cg->add_option("--edge-factor", gen.edge_factor, "kronecker edge factor")->capture_default_str();
  cg->add_flag("--weighted", gen.weighted);
  cg->add_option("--max-weight", gen.max_weight)->capture_default_str();
  cg->add_option("--seed", gen.seed)->capture_default_str();

  CompressArgs compress;
  auto* cc = app.add_subcommand("compress", "adjacency container to compressed container");
  cc->add_option("input", compress.input)->required();
  cc->add_option("-o,--output", compress.output)->required();
  cc->add_option("--offsets", compress.offsets, "ptr32, ptr64, ptrlogn, bvpl, bvil, bvsd")->capture_default_str();
  cc->add_option("--adjacency", compress.adjacency,
                 "global, local, global-gap, local-gap, varint-gap, varint-full, brb")
      ->capture_default_str();
  cc->add_option("--permuter", compress.permuter, "identity, degmin, greedy, rb, brb")->capture_default_str();
  cc->add_option("--brb-depth", compress.brb_depth, "bisection depth of brb");
  cc->add_option("--imbalance", compress.imbalance, "bisection imbalance")->capture_default_str();
  cc->add_option("--block-bits", compress.block_bits, "bit-vector block size B (0 = default)");
  cc->add_option("--interleave-period", compress.interleave_period)->capture_default_str();
  cc->add_option("--weights", compress.weights, "auto, none, global, local")->capture_default_str();
  cc->add_option("--seed", compress.seed)->capture_default_str();

  RunArgs run;
  auto* cr = app.add_subcommand("run", "run a graph algorithm, print a JSON digest");
  cr->add_option("input", run.input)->required();
  cr->add_option("--alg", run.alg, "bfs, pr, cc, sssp, tc")->required();
  cr->add_option("--source", run.source)->capture_default_str();
  cr->add_option("--threads", run.threads, "worker threads (default LOGGRAPH_THREADS or hardware)");
  cr->add_flag("--sequential", run.sequential, "single worker, bit-exact");
  cr->add_option("--iterations", run.iterations, "pr iteration cap")->capture_default_str();
  cr->add_option("--tolerance", run.tolerance, "pr L1 tolerance")->capture_default_str();
  cr->add_option("--delta", run.delta, "sssp bucket width (0 = max weight)");
  std::uint64_t run_seed = 1;
  cr->add_option("--seed", run_seed, "accepted for uniformity");

  BenchArgs bench;
  auto* cb = app.add_subcommand("bench-offsets", "random offset lookups per thread count");
  cb->add_option("input", bench.input)->required();
  cb->add_option("--threads", bench.threads, "thread counts")->capture_default_str();
  cb->add_option("--queries", bench.queries, "queries per thread")->capture_default_str();
  cb->add_option("--seed", bench.seed)->capture_default_str();

  EstimateArgs est;
  auto* ce = app.add_subcommand("estimate", "analytic size models and lower bounds");
  ce->add_option("--model", est.model, "er, pl, bounds, theory")->required();
  ce->add_option("--n", est.n)->capture_default_str();
  ce->add_option("--p", est.p)->capture_default_str();
  ce->add_option("--m", est.m, "edge count (bounds)");
  ce->add_option("--alpha", est.alpha)->capture_default_str();
  ce->add_option("--beta", est.beta)->capture_default_str();
  ce->add_option("--max-weight", est.max_weight, "0 = unweighted");
  ce->add_option("--word-bits", est.word_bits)->capture_default_str();
  ce->add_option("--block-bits", est.block_bits)->capture_default_str();
  ce->add_option("--ns", est.ns, "vertex counts (theory)");

  std::string stats_input;
  auto* cs = app.add_subcommand("stats", "describe a container");
  cs->add_option("input", stats_input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (*cg) return cmd_generate(gen);
  if (*ci) return cmd_ingest(ingest);
  if (*cc) return cmd_compress(compress);
  if (*cr) return cmd_run(run);
  if (*cb) return cmd_bench_offsets(bench);
  if (*ce) return cmd_estimate(est);
  return cmd_stats(stats_input);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DecodeError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
