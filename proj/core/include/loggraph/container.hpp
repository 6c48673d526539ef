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
#include <filesystem>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "loggraph/compressed_graph.hpp"
#include "loggraph/graph.hpp"

namespace loggraph {

// Binary container, little-endian throughout:
//   "LOGG" | u16 version | u16 kind | header | sections
// header = u64 n, u64 m, u32 flags, u8 offset kind, u8 transform kind,
//          u8 id mode, u8 gap mode, u8 weight mode, u8 brb depth, u16 reserved,
//          u32 block bits, u32 max weight
// section = u32 tag | u64 byte length | bytes
inline constexpr std::uint16_t kContainerVersion = 1;

enum class ContainerKind : std::uint16_t { kAdjacency = 1, kCompressed = 2 };

struct ContainerFlag {
  static constexpr std::uint32_t kWeighted = 1u << 0;
  static constexpr std::uint32_t kPermutation = 1u << 1;
  static constexpr std::uint32_t kReport = 1u << 2;
};

struct ContainerHeader {
  ContainerKind kind = ContainerKind::kAdjacency;
  std::uint16_t version = kContainerVersion;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint32_t flags = 0;
  OffsetKind offsets = OffsetKind::kPtr64;
  TransformScheme adjacency;
  std::uint32_t block_bits = 0;
  std::uint32_t max_weight = 0;
};

struct Container {
  ContainerHeader header;
  std::variant<AdjacencyGraph, CompressedGraph> graph;
  std::string report;  // embedded size report (compressed containers)
};

std::vector<std::uint8_t> encode_container(const AdjacencyGraph& g);
// `report` is embedded as its own section when non-empty.
std::vector<std::uint8_t> encode_container(const CompressedGraph& g, const std::string& report = {});
// Throws DecodeError on malformed input.
Container decode_container(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace loggraph
