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

#include "loggraph/offsets.hpp"
#include "loggraph/random.hpp"

namespace loggraph {
namespace {

// Bit starts of neighborhoods with the given entry counts at `entry_bits`.
std::vector<std::uint64_t> starts_for(const std::vector<std::uint64_t>& degrees, unsigned entry_bits) {
  std::vector<std::uint64_t> s{0};
  for (std::uint64_t d : degrees) s.push_back(s.back() + d * entry_bits);
  return s;
}

OffsetStructure build(const std::vector<std::uint64_t>& starts, OffsetKind kind, unsigned unit, unsigned block) {
  OffsetOptions o;
  o.kind = kind;
  o.unit_bits = unit;
  o.block_bits = block;
  return OffsetStructure(starts, o);
}

const OffsetKind kAll[] = {OffsetKind::kPtr32,  OffsetKind::kPtr64,         OffsetKind::kPtrLogn,
                           OffsetKind::kBvPlain, OffsetKind::kBvInterleaved, OffsetKind::kBvSparse};

TEST(OffsetArray, PathGraphEntries) {
  const auto starts = starts_for({1, 2, 1}, 1);
  OffsetStructure o = build(starts, OffsetKind::kPtr64, 1, 1);
  EXPECT_EQ(o.offset_of(0), 0u);
  EXPECT_EQ(o.offset_of(1), 1u);
  EXPECT_EQ(o.offset_of(2), 3u);
  EXPECT_EQ(o.size_report().raw_bits, 64u * 4);
  EXPECT_EQ(o.size_report().formula_bits, 64.0 * 4);
}

TEST(OffsetArray, LognWidth) {
  // m = 3: 2m = 6 entries, width ceil(log2 7) = 3.
  OffsetStructure o = build(starts_for({1, 2, 2, 1}, 1), OffsetKind::kPtrLogn, 1, 1);
  EXPECT_EQ(o.array()->width(), 3u);
}

TEST(OffsetArray, EmptyGraph) {
  OffsetStructure o = build(std::vector<std::uint64_t>{0, 0, 0}, OffsetKind::kPtr32, 1, 1);
  EXPECT_EQ(o.bounds(0), std::make_pair(std::uint64_t{0}, std::uint64_t{0}));
  EXPECT_EQ(o.bounds(1), std::make_pair(std::uint64_t{0}, std::uint64_t{0}));
}

TEST(OffsetArray, Ptr32Overflow) {
  std::vector<std::uint64_t> starts{0, std::uint64_t{1} << 33};
  EXPECT_THROW(build(starts, OffsetKind::kPtr32, 1, 1), CapacityError);
}

TEST(OffsetBitVector, DefinitionExample) {
  // starts at blocks {0,2,3}, L = 5 -> 10110 (plus the end sentinel beyond).
  std::vector<std::uint64_t> blocks{0, 2, 3};
  for (auto flavor : {BitVectorFlavor::kPlain, BitVectorFlavor::kInterleaved, BitVectorFlavor::kSparse}) {
    OffsetBitVector bv(blocks, 5, flavor, 512);
    EXPECT_EQ(bv.count_ones(), 3u);
    EXPECT_EQ(bv.select(1), 0u);
    EXPECT_EQ(bv.select(2), 2u);
    EXPECT_EQ(bv.select(3), 3u);
    EXPECT_EQ(bv.rank(4), 3u);
    EXPECT_EQ(bv.rank(1), 1u);
  }
}

TEST(OffsetStructure, PathGraphBitVector) {
  for (auto kind : {OffsetKind::kBvPlain, OffsetKind::kBvInterleaved, OffsetKind::kBvSparse}) {
    OffsetStructure o = build(starts_for({1, 2, 1}, 2), kind, 2, 2);
    EXPECT_EQ(o.offset_of(0), 0u);
    EXPECT_EQ(o.offset_of(1), 1u);
    EXPECT_EQ(o.offset_of(2), 3u);
    EXPECT_EQ(o.bounds(2).second, 8u);
  }
}

TEST(OffsetStructure, IsolatedVertexResolvesToNext) {
  for (auto kind : kAll) {
    OffsetStructure o = build(starts_for({2, 0, 3}, 1), kind, 1, 1);
    auto [b, e] = o.bounds(1);
    EXPECT_EQ(b, 2u) << to_string(kind);
    EXPECT_EQ(e, 2u) << to_string(kind);
    EXPECT_EQ(o.bounds(2), std::make_pair(std::uint64_t{2}, std::uint64_t{5}));
  }
}

TEST(OffsetStructure, AllFlavorsAgreeWithPtr64) {
  Rng rng(5);
  std::vector<std::uint64_t> degrees(3000);
  for (auto& d : degrees) d = rng.uniform() < 0.2 ? 0 : rng.below(40);
  degrees.back() = 0;
  degrees.front() = 0;
  for (unsigned entry : {1u, 8u, 13u}) {
    const auto starts = starts_for(degrees, entry);
    OffsetStructure reference = build(starts, OffsetKind::kPtr64, entry, entry);
    for (auto kind : kAll) {
      OffsetStructure o = build(starts, kind, entry, entry);
      std::uint64_t previous = 0;
      for (VertexId v = 0; v < degrees.size(); ++v) {
        auto [b, e] = o.bounds(v);
        ASSERT_EQ(e - b, degrees[v] * entry) << to_string(kind) << " v=" << v;
        if (degrees[v] > 0) ASSERT_EQ(b, reference.bounds(v).first);
        ASSERT_GE(b, previous);
        previous = b;
      }
    }
  }
}

TEST(OffsetStructure, RejectsMisalignedStart) {
  std::vector<std::uint64_t> starts{0, 3, 8};
  EXPECT_THROW(build(starts, OffsetKind::kBvPlain, 1, 8), ConfigError);
  EXPECT_THROW(build(starts, OffsetKind::kPtr64, 8, 8), ConfigError);
}

TEST(OffsetStructure, OutOfRangeVertex) {
  OffsetStructure o = build(starts_for({1, 1}, 1), OffsetKind::kBvSparse, 1, 1);
  EXPECT_THROW(o.bounds(2), DomainError);
}

TEST(OffsetStructure, FormulaBits) {
  std::vector<std::uint64_t> degrees(100000, 10);
  const auto starts = starts_for(degrees, 1);
  OffsetStructure plain = build(starts, OffsetKind::kBvPlain, 1, 1);
  EXPECT_DOUBLE_EQ(plain.size_report().formula_bits, 1e6);
  OffsetStructure sparse = build(starts, OffsetKind::kBvSparse, 1, 1);
  const auto r = sparse.size_report();
  EXPECT_NEAR(r.formula_bits, 1e5 * (2 + std::log2(10.0)), 1.0);
  EXPECT_LE(static_cast<double>(r.raw_bits + r.aux_bits), 1.25 * r.formula_bits);
  OffsetStructure ptr = build(starts, OffsetKind::kPtr64, 1, 1);
  EXPECT_EQ(ptr.size_report().raw_bits, 64u * 100001);
}

TEST(OffsetStructure, SerializationRoundTrip) {
  Rng rng(8);
  std::vector<std::uint64_t> degrees(500);
  for (auto& d : degrees) d = rng.below(6);
  const auto starts = starts_for(degrees, 8);
  for (auto kind : kAll) {
    OffsetStructure o = build(starts, kind, 8, 8);
    BinaryWriter out;
    o.write(out);
    BinaryReader in(out.data());
    OffsetStructure back = OffsetStructure::read(in);
    for (VertexId v = 0; v < degrees.size(); ++v) ASSERT_EQ(back.bounds(v), o.bounds(v));
  }
}

}  // namespace
}  // namespace loggraph
