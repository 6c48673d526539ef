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

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "loggraph/analysis.hpp"
#include "loggraph/fine.hpp"
#include "loggraph/graph.hpp"

namespace loggraph {
namespace {

using boost::multiprecision::cpp_int;

double exact_log2_binomial(unsigned a, unsigned b) {
  cpp_int c = 1;
  for (unsigned i = 0; i < b; ++i) c = c * (a - i) / (i + 1);
  const unsigned top = static_cast<unsigned>(msb(c));
  if (top <= 52) return std::log2(c.convert_to<double>());
  const cpp_int head = c >> (top - 52);
  return top - 52 + std::log2(head.convert_to<double>());
}

TEST(Analysis, Log2BinomialMatchesExact) {
  for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{
           {6, 6}, {10, 3}, {64, 32}, {1000, 300}, {5000, 17}, {20000, 10000}}) {
    EXPECT_NEAR(log2_binomial(a, b), exact_log2_binomial(a, b), 1e-6 * std::max(1.0, exact_log2_binomial(a, b)))
        << a << " " << b;
  }
  EXPECT_THROW(log2_binomial(3, 4), DomainError);
  EXPECT_THROW(log2_binomial(-1, 0), DomainError);
}

TEST(Analysis, Log2BinomialHugeArguments) {
  // C(N, m) for m << N behaves like m log2(N e / m).
  const double n = std::ldexp(1.0, 83), m = std::ldexp(1.0, 46);
  const double approx = m * (std::log2(n / m) + 1 / std::log(2.0));
  EXPECT_NEAR(log2_binomial(n, m) / approx, 1.0, 1e-4);
  EXPECT_TRUE(std::isfinite(log2_binomial(1e30, 1e20)));
}

TEST(Analysis, LowerBoundsSmall) {
  auto lb = lower_bounds(8, 10, 16, 64, 8);
  EXPECT_DOUBLE_EQ(lb.vertex_id, 3.0);
  EXPECT_DOUBLE_EQ(lb.vertex_id_ceil(), 3.0);
  EXPECT_DOUBLE_EQ(lb.offset, std::log2(20.0));
  EXPECT_DOUBLE_EQ(lb.weight, 4.0);
  EXPECT_NEAR(lb.bitvector, exact_log2_binomial(160, 8), 1e-6);
  EXPECT_DOUBLE_EQ(lower_bounds(4, 6, 1, 64, 8).graph, 0.0);
  EXPECT_THROW(lower_bounds(4, 7, 1, 64, 8), DomainError);
}

TEST(Analysis, LowerBoundsTerabyteExample) {
  const double n = std::ldexp(1.0, 42), m = std::ldexp(1.0, 46);
  auto lb = lower_bounds(n, m, 1, 64, 64);
  EXPECT_NEAR(lb.adjacency_array_bits / 8 / 1.126e15, 1.0, 0.05);
  EXPECT_NEAR(lb.graph / 8 / 3.5e14, 1.0, 0.05);
}

TEST(Analysis, ErPlugIn) {
  auto s = er_expected_sizes(4, 0.5);
  EXPECT_DOUBLE_EQ(s.adjacency_bits, 16);
  EXPECT_DOUBLE_EQ(s.offsets_bits, 16);
  EXPECT_DOUBLE_EQ(er_expected_sizes(4, 1.0).adjacency_bits, 32);
  EXPECT_DOUBLE_EQ(er_expected_sizes(1024, 0.25, 200).adjacency_bits, (10 + 8) * 0.25 * 1024 * 1024);
}

TEST(Analysis, ErMonteCarlo) {
  const std::uint64_t n = 1 << 14;
  const double p = std::ldexp(1.0, -8);
  double sum = 0;
  const int seeds = 30;
  for (int s = 1; s <= seeds; ++s) {
    auto g = generate(ErdosRenyi{n, p, static_cast<std::uint64_t>(s)});
    sum += static_cast<double>(fine_size_bits(g, FineScheme{}).payload_bits);
  }
  const double expect = er_expected_sizes(static_cast<double>(n), p).adjacency_bits;
  EXPECT_NEAR(sum / seeds / expect, 1.0, 0.10);
}

TEST(Analysis, PowerLaw) {
  auto at2 = pl_expected_size(1e6, 1.0, 2.0);
  EXPECT_NEAR(at2.edges, 0.5 * std::log(at2.max_degree), 1e-9);
  auto near2 = pl_expected_size(1e6, 1.0, 2.0 + 1e-7);
  EXPECT_NEAR(near2.edges / at2.edges, 1.0, 1e-3);

  auto pl = pl_expected_size(1e6, 1.0, 2.5);
  const double d = std::pow(1e6 * std::log2(1e6) / 1.5, 1 / 1.5);
  EXPECT_NEAR(pl.max_degree, d, 1e-6 * d);
  // The edge estimate is the integral of alpha x^(1-beta) / 2 over [1, d-hat];
  // midpoint quadrature in log space serves as the oracle.
  double integral = 0;
  const int steps = 200000;
  const double h = std::log(d) / steps;
  for (int i = 0; i < steps; ++i) {
    const double x = std::exp((i + 0.5) * h);
    integral += 0.5 * std::pow(x, -1.5) * x * h;
  }
  EXPECT_NEAR(pl.edges / integral, 1.0, 1e-6);
  // The integral drops the discrete mass near x = 1, so it undershoots the
  // direct sum by about a quarter at this beta.
  EXPECT_NEAR(pl.edges / pl_edges_direct_sum(1e6, 1.0, 2.5), 0.7648, 1e-3);
  EXPECT_DOUBLE_EQ(pl.adjacency_bits, 2 * pl.edges * 20);

  for (double beta : {2.2, 2.5, 2.8}) {
    double prev = 0;
    for (double n = 1e3; n <= 1e9; n *= 10) {
      const double a = pl_expected_size(n, 2.0, beta).adjacency_bits;
      EXPECT_GT(a, prev) << beta << " " << n;
      prev = a;
    }
  }
  EXPECT_THROW(pl_expected_size(1e6, 1.0, 1.0), DomainError);
  EXPECT_THROW(pl_expected_size(1e6, 0.0, 2.5), DomainError);
}

TEST(Analysis, TheoryCurves) {
  auto rows = theory_curves({1024, 4096}, 0.01, 2.0, 2.5, 255);
  ASSERT_FALSE(rows.empty());
  bool baseline = false;
  for (const auto& r : rows) {
    if (r.scheme != "32+8") continue;
    baseline = true;
    const double m = r.model == "er" ? 0.01 * r.n * r.n / 2 : pl_expected_size(r.n, 2.0, 2.5, 255).edges;
    EXPECT_NEAR(r.bits, 2 * m * 40, 1e-6 * r.bits) << r.model;
  }
  EXPECT_TRUE(baseline);
  auto csv = theory_csv(rows);
  EXPECT_EQ(csv.rfind("model,n,scheme,bits\n", 0), 0u);
}

}  // namespace
}  // namespace loggraph
