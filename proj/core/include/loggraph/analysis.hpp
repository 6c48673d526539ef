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

#include <cstdint>
#include <string>
#include <vector>

namespace loggraph {

// log2 of the binomial coefficient C(a, b) for real a >= b >= 0. Throws
// DomainError when b > a or an argument is negative.
double log2_binomial(double a, double b);

struct LowerBounds {
  double vertex_id = 0;  // log n
  double offset = 0;     // log 2m
  double weight = 0;     // log W-hat
  double bitvector = 0;  // log C(2Wm/B, n)
  double graph = 0;      // log C(C(n,2), m)
  double adjacency_array_bits = 0;  // 2m * W, the traditional array of ids

  double vertex_id_ceil() const;
  double offset_ceil() const;
  double weight_ceil() const;
  double bitvector_ceil() const;
  double graph_ceil() const;
};

// `word_bits` is W (machine word of the traditional representation) and
// `block_bits` is B. Throws DomainError when m > C(n,2) or 2Wm/B < n.
LowerBounds lower_bounds(double n, double m, double max_weight, double word_bits, double block_bits);

struct ErSizes {
  double adjacency_bits = 0;
  double offsets_bits = 0;
};

// (ceil(log n) + ceil(log W-hat)) p n^2 and n ceil(log 2p + 2 log n).
// A max weight of 0 selects the unweighted model.
ErSizes er_expected_sizes(double n, double p, double max_weight = 0);

struct PowerLawSizes {
  double max_degree = 0;      // d-hat = (alpha n log n / (beta-1))^(1/(beta-1))
  double edges = 0;           // integral estimate of m
  double adjacency_bits = 0;  // 2m (ceil(log n) + ceil(log W-hat))
  double offsets_bits = 0;    // n ceil(log 2m)
};

// At beta = 2 the integral of 1/x gives m = (alpha/2) ln d-hat.
// Throws DomainError for beta <= 1, alpha <= 0 or n < 2.
PowerLawSizes pl_expected_size(double n, double alpha, double beta, double max_weight = 0);

// (1/2) sum_{x=1}^{floor(d-hat)} alpha x^(1-beta).
double pl_edges_direct_sum(double n, double alpha, double beta);

struct TheoryRow {
  std::string model;
  double n = 0;
  std::string scheme;
  double bits = 0;
};

// Expected-size curves of both random-graph models for each n, next to the
// 32-bit-id / 8-bit-weight array baseline 2m(32+8). The ER model uses edge
// probability `er_p`; the power-law model uses (alpha, beta).
std::vector<TheoryRow> theory_curves(const std::vector<double>& ns, double er_p, double alpha,
                                     double beta, double max_weight);
// "model,n,scheme,bits" header plus one line per row.
std::string theory_csv(const std::vector<TheoryRow>& rows);

}  // namespace loggraph
