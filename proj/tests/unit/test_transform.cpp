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

#include "loggraph/random.hpp"
#include "loggraph/transform.hpp"
#include "testing.hpp"

namespace loggraph {
namespace {

TEST(VarintTransform, GapExample) {
  std::vector<std::uint8_t> out;
  encode_varint_neighborhood(5, std::vector<VertexId>{2, 6, 9}, true, out);
  EXPECT_EQ(out, (std::vector<std::uint8_t>{5, 4, 3}));
}

TEST(VarintTransform, FullExample) {
  std::vector<std::uint8_t> out;
  encode_varint_neighborhood(5, std::vector<VertexId>{2, 6, 9}, false, out);
  EXPECT_EQ(out, (std::vector<std::uint8_t>{2, 6, 9}));
}

TEST(VarintTransform, RejectsUnsorted) {
  std::vector<std::uint8_t> out;
  EXPECT_THROW(encode_varint_neighborhood(0, std::vector<VertexId>{4, 4}, true, out), EncodeError);
}

TEST(VarintTransform, TranslationInvariance) {
  const std::vector<VertexId> a{100, 130, 131, 400};
  std::vector<VertexId> b;
  for (VertexId x : a) b.push_back(x + 5000);
  std::vector<std::uint8_t> ea, eb;
  encode_varint_neighborhood(120, a, true, ea);
  encode_varint_neighborhood(5120, b, true, eb);
  EXPECT_EQ(ea, eb);
}

BrbCodec codec_for(std::uint64_t n, unsigned depth, Rng& rng) {
  // Random part sizes summing to n.
  const std::uint64_t parts = std::uint64_t{1} << depth;
  std::vector<std::uint64_t> cuts{0, n};
  for (std::uint64_t i = 1; i < parts; ++i) cuts.push_back(rng.below(n + 1));
  std::sort(cuts.begin(), cuts.end());
  BrbCodec c;
  c.depth = depth;
  c.part_start = cuts;
  std::uint64_t largest = 0;
  for (std::uint64_t i = 0; i < parts; ++i) largest = std::max(largest, cuts[i + 1] - cuts[i]);
  c.suffix_width = bits_for(largest ? largest - 1 : 0);
  return c;
}

TEST(Transforms, RandomRoundTrips) {
  Rng rng(17);
  const std::uint64_t n = 3000;
  for (int trial = 0; trial < 2500; ++trial) {
    const VertexId v = static_cast<VertexId>(rng.below(n));
    std::vector<VertexId> nbrs;
    const double density = rng.uniform() * 0.05;
    for (VertexId u = 0; u < n; ++u) {
      if (rng.uniform() < density) nbrs.push_back(u);
    }
    for (bool gaps : {true, false}) {
      std::vector<std::uint8_t> bytes;
      encode_varint_neighborhood(v, nbrs, gaps, bytes);
      ASSERT_EQ(decode_varint_neighborhood(bytes, v, gaps), nbrs);
    }
    const unsigned depth = 1 + static_cast<unsigned>(rng.below(5));
    BrbCodec codec = codec_for(n, depth, rng);
    BitWriter w;
    w.write(0, static_cast<unsigned>(rng.below(8)));
    const std::uint64_t begin = w.bit_length();
    write_brb_neighborhood(w, nbrs, codec);
    w.align(64);
    const std::uint64_t end = w.bit_length();
    auto payload = std::move(w).finish();
    auto got = decode_brb_neighborhood(payload.data(), begin, end, codec);
    ASSERT_EQ(got, nbrs);
    ASSERT_TRUE(std::is_sorted(got.begin(), got.end()));
  }
}

TEST(BrbTransform, GroupsByPrefix) {
  BrbCodec c;
  c.depth = 1;
  c.suffix_width = 2;
  c.part_start = {0, 4, 8};
  auto groups = brb_groups(std::vector<VertexId>{1, 2, 5}, c);
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups[0].prefix, 0u);
  EXPECT_EQ(groups[0].suffixes, (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(groups[1].prefix, 1u);
  EXPECT_EQ(groups[1].suffixes, (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(c.group_overhead_bits(2), 9u);
}

TEST(Measure, ConsecutiveNeighborsCostOneBytePerEntry) {
  auto g = testing::path_graph(1000);
  auto m = measure(g, {TransformKind::kVarintGap, {}, 0});
  EXPECT_EQ(m.payload_bits, 8 * 2 * g.num_edges());
  EXPECT_EQ(m.histogram.at(2), 998u);
  EXPECT_EQ(m.histogram.at(1), 2u);
}

TEST(Measure, FullNotSmallerThanGapAfterRb) {
  auto g = generate(GraphSpec{TwoCommunity{1024, 0.03, 0.001, 4}, false, 255});
  auto h = apply(g, rb_permutation(bisect_full(g)));
  const auto gap = measure(h, {TransformKind::kVarintGap, {}, 0}).payload_bits;
  const auto full = measure(h, {TransformKind::kVarintFull, {}, 0}).payload_bits;
  EXPECT_GE(full, gap);
}

TEST(Measure, BrbItemizesGroupOverhead) {
  auto g = testing::two_cliques();
  auto labels = brb_labels(bisect(g, 1));
  auto h = apply(g, labels.permutation);
  BrbCodec codec = BrbCodec::from_labels(labels);
  auto m = measure(h, {TransformKind::kBrb, {}, 1}, &codec);
  // 8 neighborhoods: 6 with one group, 2 (bridge ends) with two.
  EXPECT_EQ(m.group_overhead_bits, 10u * 9);
  EXPECT_EQ(m.payload_bits, m.group_overhead_bits + 2 * g.num_edges() * codec.suffix_width);
}

TEST(ParseScheme, Names) {
  EXPECT_EQ(parse_adjacency_scheme("local-gap").fine.id_mode, IdMode::kLocal);
  EXPECT_EQ(parse_adjacency_scheme("global-gap").fine.gap_mode, GapMode::kFixedGap);
  EXPECT_THROW(parse_adjacency_scheme("brb"), ConfigError);
  EXPECT_THROW(parse_adjacency_scheme("huffman"), ConfigError);
  EXPECT_EQ(to_string(parse_adjacency_scheme("brb", 3)), "brb3");
}

}  // namespace
}  // namespace loggraph
