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

#include "loggraph/bitio.hpp"
#include "loggraph/random.hpp"
#include "testing.hpp"

namespace loggraph {
namespace {

TEST(BitsFor, SmallValues) {
  EXPECT_EQ(bits_for(0), 1u);
  EXPECT_EQ(bits_for(1), 1u);
  EXPECT_EQ(bits_for(7), 3u);
  EXPECT_EQ(bits_for(8), 4u);
  EXPECT_EQ(bits_for(~std::uint64_t{0}), 64u);
  EXPECT_EQ(ceil_log2(1), 0u);
  EXPECT_EQ(ceil_log2(8), 3u);
  EXPECT_EQ(ceil_log2(9), 4u);
}

TEST(BitWriter, MatchesNaiveReader) {
  Rng rng(7);
  BitWriter w;
  std::vector<std::pair<std::uint64_t, unsigned>> fields;
  for (int i = 0; i < 20000; ++i) {
    const unsigned width = 1 + static_cast<unsigned>(rng.below(64));
    const std::uint64_t value = rng.next() & low_mask(width);
    fields.emplace_back(value, width);
    w.write(value, width);
  }
  const std::uint64_t total = w.bit_length();
  auto bytes = std::move(w).finish();
  ASSERT_GE(bytes.size(), (total + 7) / 8 + kSlackBytes);
  std::uint64_t pos = 0;
  for (auto [value, width] : fields) {
    ASSERT_EQ(testing::naive_read(bytes, pos, width), value);
    ASSERT_EQ(read_bits(bytes.data(), pos, width), value) << "pos " << pos << " width " << width;
    pos += width;
  }
}

TEST(BitWriter, AlignPadsWithFill) {
  BitWriter w;
  w.write(1, 3);
  w.align(8, true);
  EXPECT_EQ(w.bit_length(), 8u);
  w.write(0, 1);
  w.align(64);
  EXPECT_EQ(w.bit_length(), 64u);
  auto bytes = std::move(w).finish();
  EXPECT_EQ(bytes[0], 0xF9);
  EXPECT_EQ(bytes[1], 0);
}

TEST(PackedArray, RoundTrip) {
  Rng rng(3);
  for (unsigned width : {1u, 5u, 13u, 32u, 57u, 63u, 64u}) {
    std::vector<std::uint64_t> values(1000);
    for (auto& v : values) v = rng.next() & low_mask(width);
    PackedArray a(values, width);
    ASSERT_EQ(a.size(), values.size());
    EXPECT_EQ(a.bit_length(), values.size() * width);
    for (std::size_t i = 0; i < values.size(); ++i) ASSERT_EQ(a[i], values[i]);
  }
}

TEST(PackedArray, RejectsOverwideValue) {
  std::vector<std::uint64_t> values{3, 4};
  EXPECT_THROW(PackedArray(values, 2), EncodeError);
}

TEST(Varint, KnownEncodings) {
  EXPECT_EQ(varint_encode(0), (std::vector<std::uint8_t>{0x00}));
  EXPECT_EQ(varint_encode(127), (std::vector<std::uint8_t>{0x7F}));
  EXPECT_EQ(varint_encode(128), (std::vector<std::uint8_t>{0x80, 0x01}));
  EXPECT_EQ(varint_encode(300), (std::vector<std::uint8_t>{0xAC, 0x02}));
  EXPECT_EQ(varint_length(0), 1u);
  EXPECT_EQ(varint_length(16383), 2u);
  EXPECT_EQ(varint_length(16384), 3u);
}

TEST(Varint, RoundTripAndTruncation) {
  Rng rng(11);
  std::vector<std::uint8_t> bytes;
  std::vector<std::uint64_t> values;
  for (int i = 0; i < 5000; ++i) {
    const std::uint64_t v = rng.next() >> rng.below(64);
    values.push_back(v);
    varint_encode(v, bytes);
  }
  std::size_t pos = 0;
  for (std::uint64_t v : values) {
    auto [x, next] = varint_decode(bytes, pos);
    ASSERT_EQ(x, v);
    pos = next;
  }
  EXPECT_EQ(pos, bytes.size());
  std::vector<std::uint8_t> cut{0x80, 0x80};
  EXPECT_THROW(varint_decode(cut, 0), DecodeError);
}

TEST(Zigzag, SmallValues) {
  EXPECT_EQ(zigzag(0), 0u);
  EXPECT_EQ(zigzag(-1), 1u);
  EXPECT_EQ(zigzag(1), 2u);
  EXPECT_EQ(zigzag(-3), 5u);
  for (std::int64_t k : {-1000000007LL, -1LL, 0LL, 5LL, 1LL << 40}) EXPECT_EQ(unzigzag(zigzag(k)), k);
}

}  // namespace
}  // namespace loggraph
