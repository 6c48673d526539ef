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

#include <filesystem>

#include "loggraph/container.hpp"
#include "testing.hpp"

namespace loggraph {
namespace {

TEST(Container, AdjacencyRoundTrip) {
  for (bool weighted : {false, true}) {
    auto g = generate(ErdosRenyi{120, 0.05, 3}, weighted, 50);
    auto bytes = encode_container(g);
    auto c = decode_container(bytes);
    EXPECT_EQ(c.header.kind, ContainerKind::kAdjacency);
    EXPECT_TRUE(std::get<AdjacencyGraph>(c.graph) == g);
  }
}

TEST(Container, HeaderLayout) {
  auto g = testing::path_graph(3);
  auto bytes = encode_container(g);
  ASSERT_GE(bytes.size(), 44u);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "LOGG");
  EXPECT_EQ(bytes[4], 1);  // version, little-endian
  EXPECT_EQ(bytes[6], 1);  // adjacency kind
  EXPECT_EQ(bytes[8], 3);  // n
  EXPECT_EQ(bytes[16], 2);  // m
}

TEST(Container, CompressedRoundTripAnswersIdenticalQueries) {
  auto g = generate(Kronecker{9, 8, 6});
  for (const auto& b : testing::all_scheme_pairs()) {
    auto cg = CompressedGraph::build(g, b);
    auto c = decode_container(encode_container(cg, "component,bits\n"));
    const auto& back = std::get<CompressedGraph>(c.graph);
    EXPECT_EQ(c.report, "component,bits\n");
    ASSERT_EQ(back.num_vertices(), cg.num_vertices());
    for (VertexId v = 0; v < cg.num_vertices(); ++v) {
      ASSERT_EQ(back.neighbors(v), cg.neighbors(v)) << testing::describe(b);
    }
    EXPECT_EQ(encode_container(back), encode_container(cg));
  }
}

TEST(Container, RejectsCorruption) {
  auto g = testing::path_graph(10);
  auto bytes = encode_container(g);
  auto bad = bytes;
  bad[0] = 'X';
  EXPECT_THROW(decode_container(bad), DecodeError);
  auto truncated = std::vector<std::uint8_t>(bytes.begin(), bytes.end() - 3);
  EXPECT_THROW(decode_container(truncated), DecodeError);
  auto cg = CompressedGraph::build(g, testing::options(OffsetKind::kBvSparse, "varint-gap", PermuterKind::kIdentity));
  auto cbytes = encode_container(cg);
  for (std::size_t cut : {std::size_t{10}, cbytes.size() / 2, cbytes.size() - 1}) {
    EXPECT_THROW(decode_container(std::vector<std::uint8_t>(cbytes.begin(), cbytes.begin() + cut)), DecodeError);
  }
}

TEST(Container, FileRoundTrip) {
  auto path = std::filesystem::temp_directory_path() / "loggraph_container_test.bin";
  auto g = testing::complete_graph(5);
  write_file(path, encode_container(g));
  auto c = decode_container(read_file(path));
  EXPECT_TRUE(std::get<AdjacencyGraph>(c.graph) == g);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace loggraph
