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
#include <iomanip>
#include <numbers>
#include <sstream>

#include "loggraph/analysis.hpp"
#include "loggraph/types.hpp"

namespace loggraph {
namespace {

// ln Gamma(a+1) - ln Gamma(a-b+1) without cancellation for large a.
double log_falling(double a, double b) {
  if (a < 1e7) return std::lgamma(a + 1) - std::lgamma(a - b + 1);
  const double r = b / a;
  const double c = a - b;
  double value = b * std::log(a) - (c + 0.5) * std::log1p(-r) - b;
  if (c > 0) value += 1.0 / (12 * a) - 1.0 / (12 * c);
  return value;
}

double ceil_log2_real(double x) { return x <= 1 ? 0.0 : std::ceil(std::log2(x)); }

}  // namespace

double log2_binomial(double a, double b) {
  if (a < 0 || b < 0 || b > a) throw DomainError("binomial needs 0 <= b <= a");
  b = std::min(b, a - b);
  if (b == 0) return 0;
  return (log_falling(a, b) - std::lgamma(b + 1)) / std::numbers::ln2;
}

double LowerBounds::vertex_id_ceil() const { return std::ceil(vertex_id); }
double LowerBounds::offset_ceil() const { return std::ceil(offset); }
double LowerBounds::weight_ceil() const { return std::ceil(weight); }
double LowerBounds::bitvector_ceil() const { return std::ceil(bitvector); }
double LowerBounds::graph_ceil() const { return std::ceil(graph); }

LowerBounds lower_bounds(double n, double m, double max_weight, double word_bits, double block_bits) {
  if (n < 1 || m < 0 || max_weight < 0 || word_bits <= 0 || block_bits <= 0) {
    throw DomainError("lower bounds need n >= 1, m >= 0, W-hat >= 0, W > 0, B > 0");
  }
  const double pairs = n * (n - 1) / 2;
  if (m > pairs) throw DomainError("m exceeds C(n,2)");
  const double blocks = 2 * word_bits * m / block_bits;
  if (blocks < n) throw DomainError("2Wm/B is smaller than n");
  LowerBounds lb;
  lb.vertex_id = std::log2(n);
  lb.offset = m > 0 ? std::log2(2 * m) : 0;
  lb.weight = max_weight > 1 ? std::log2(max_weight) : 0;
  lb.bitvector = log2_binomial(blocks, n);
  lb.graph = log2_binomial(pairs, m);
  lb.adjacency_array_bits = 2 * m * word_bits;
  return lb;
}

ErSizes er_expected_sizes(double n, double p, double max_weight) {
  if (!(p > 0 && p <= 1)) throw DomainError("edge probability must lie in (0, 1]");
  if (n < 1) throw DomainError("n must be positive");
  ErSizes s;
  const double id_bits = ceil_log2_real(n) + (max_weight > 0 ? ceil_log2_real(max_weight) : 0);
  s.adjacency_bits = id_bits * p * n * n;
  s.offsets_bits = n * std::max(0.0, std::ceil(std::log2(2 * p) + 2 * std::log2(n)));
  return s;
}

namespace {

double pl_max_degree(double n, double alpha, double beta) {
  return std::pow(alpha * n * std::log2(n) / (beta - 1), 1 / (beta - 1));
}

void check_pl(double n, double alpha, double beta) {
  if (!(beta > 1) || !(alpha > 0) || n < 2) throw DomainError("power-law model needs beta > 1, alpha > 0, n >= 2");
}

}  // namespace

PowerLawSizes pl_expected_size(double n, double alpha, double beta, double max_weight) {
  check_pl(n, alpha, beta);
  PowerLawSizes s;
  s.max_degree = pl_max_degree(n, alpha, beta);
  if (beta == 2) {
    s.edges = alpha / 2 * std::log(s.max_degree);
  } else {
    s.edges = alpha / 2 / (2 - beta) * (std::pow(s.max_degree, 2 - beta) - 1);
  }
  const double id_bits = ceil_log2_real(n) + (max_weight > 0 ? ceil_log2_real(max_weight) : 0);
  s.adjacency_bits = 2 * s.edges * id_bits;
  s.offsets_bits = n * ceil_log2_real(2 * s.edges);
  return s;
}

double pl_edges_direct_sum(double n, double alpha, double beta) {
  check_pl(n, alpha, beta);
  const auto top = static_cast<std::uint64_t>(std::floor(pl_max_degree(n, alpha, beta)));
  double sum = 0;
  for (std::uint64_t x = top; x >= 1; --x) sum += alpha * std::pow(static_cast<double>(x), 1 - beta);
  return sum / 2;
}

std::vector<TheoryRow> theory_curves(const std::vector<double>& ns, double er_p, double alpha,
                                     double beta, double max_weight) {
  std::vector<TheoryRow> rows;
  for (double n : ns) {
    const ErSizes er = er_expected_sizes(n, er_p, max_weight);
    const double er_m = er_p * n * n / 2;
    rows.push_back({"er", n, "loggraph", er.adjacency_bits});
    rows.push_back({"er", n, "32+8", 2 * er_m * (32 + 8)});
    const PowerLawSizes pl = pl_expected_size(n, alpha, beta, max_weight);
    rows.push_back({"pl", n, "loggraph", pl.adjacency_bits});
    rows.push_back({"pl", n, "32+8", 2 * pl.edges * (32 + 8)});
  }
  return rows;
}

std::string theory_csv(const std::vector<TheoryRow>& rows) {
  std::ostringstream out;
  out << "model,n,scheme,bits\n" << std::setprecision(17);
  for (const auto& r : rows) out << r.model << ',' << r.n << ',' << r.scheme << ',' << r.bits << '\n';
  return out.str();
}

}  // namespace loggraph
