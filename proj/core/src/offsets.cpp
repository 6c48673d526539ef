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

#include "loggraph/offsets.hpp"

namespace loggraph {
namespace {

constexpr std::string_view kOffsetNames[] = {"ptr32", "ptr64", "ptrlogn", "bvpl", "bvil", "bvsd"};

}  // namespace

std::string_view to_string(OffsetKind kind) { return kOffsetNames[static_cast<int>(kind)]; }

OffsetKind parse_offset_kind(std::string_view name) {
  for (int i = 0; i < 6; ++i) {
    if (kOffsetNames[i] == name) return static_cast<OffsetKind>(i);
  }
  throw ConfigError("unknown offset structure '" + std::string(name) +
                    "' (expected ptr32, ptr64, ptrlogn, bvpl, bvil or bvsd)");
}

// ---------------------------------------------------------------------------
// OffsetArray

OffsetArray::OffsetArray(std::span<const std::uint64_t> entries, unsigned width_bits) {
  const std::uint64_t last = entries.empty() ? 0 : entries.back();
  const unsigned width = width_bits == 0 ? bits_for(last) : width_bits;
  if (width < 64 && (last >> width) != 0) {
    throw CapacityError("offset " + std::to_string(last) + " does not fit in a " +
                        std::to_string(width) + "-bit pointer");
  }
  entries_ = PackedArray(entries, width);
}

void OffsetArray::write(BinaryWriter& out) const {
  out.u8(static_cast<std::uint8_t>(entries_.width()));
  out.u64(entries_.size());
  out.blob(entries_.bytes());
}

OffsetArray OffsetArray::read(BinaryReader& in) {
  const unsigned width = in.u8();
  const std::uint64_t count = in.u64();
  auto bytes = in.blob();
  if (width == 0 || width > 64 || bytes.size() < (count * width + 7) / 8) {
    throw DecodeError("corrupt offset array");
  }
  OffsetArray a;
  a.entries_ = PackedArray::from_bytes(std::move(bytes), width, count);
  return a;
}

// ---------------------------------------------------------------------------
// OffsetBitVector

OffsetBitVector::OffsetBitVector(std::span<const std::uint64_t> block_starts,
                                 std::uint64_t length, BitVectorFlavor flavor,
                                 std::uint64_t interleave_period) {
  switch (flavor) {
    case BitVectorFlavor::kPlain:
      bits_ = PlainBitVector::from_positions(block_starts, length);
      break;
    case BitVectorFlavor::kInterleaved: {
      auto plain = PlainBitVector::from_positions(block_starts, length);
      bits_ = InterleavedBitVector(plain.words(), length, interleave_period);
      break;
    }
    case BitVectorFlavor::kSparse:
      bits_ = SparseBitVector(block_starts, length, true);
      break;
  }
}

std::uint64_t OffsetBitVector::size() const {
  return std::visit([](const auto& b) { return b.size(); }, bits_);
}
std::uint64_t OffsetBitVector::count_ones() const {
  return std::visit([](const auto& b) { return b.count_ones(); }, bits_);
}
std::uint64_t OffsetBitVector::rank(std::uint64_t x) const {
  return std::visit([x](const auto& b) { return b.rank(x); }, bits_);
}
std::uint64_t OffsetBitVector::select(std::uint64_t j) const {
  return std::visit([j](const auto& b) { return b.select(j); }, bits_);
}
std::pair<std::uint64_t, std::uint64_t> OffsetBitVector::select_pair(std::uint64_t j) const {
  return std::visit(
      [j](const auto& b) -> std::pair<std::uint64_t, std::uint64_t> {
        if constexpr (std::is_same_v<std::decay_t<decltype(b)>, SparseBitVector>) {
          return b.select_pair(j);
        } else {
          const std::uint64_t first = b.select(j);
          const std::uint64_t second = b.next_one(first + 1);
          if (second >= b.size()) throw DomainError("select index out of range");
          return {first, second};
        }
      },
      bits_);
}
std::uint64_t OffsetBitVector::interleave_period() const {
  const auto* il = std::get_if<InterleavedBitVector>(&bits_);
  return il ? il->period() : InterleavedBitVector::kDefaultPeriod;
}

std::uint64_t OffsetBitVector::raw_bits() const {
  return std::visit([](const auto& b) { return b.raw_bits(); }, bits_);
}
std::uint64_t OffsetBitVector::aux_bits() const {
  return std::visit([](const auto& b) { return b.aux_bits(); }, bits_);
}

void OffsetBitVector::write(BinaryWriter& out) const {
  out.u8(static_cast<std::uint8_t>(bits_.index()));
  std::visit([&out](const auto& b) { b.write(out); }, bits_);
}

OffsetBitVector OffsetBitVector::read(BinaryReader& in) {
  OffsetBitVector bv;
  switch (in.u8()) {
    case 0: bv.bits_ = PlainBitVector::read(in); break;
    case 1: bv.bits_ = InterleavedBitVector::read(in); break;
    case 2: bv.bits_ = SparseBitVector::read(in); break;
    default: throw DecodeError("unknown bit-vector flavor");
  }
  return bv;
}

// ---------------------------------------------------------------------------
// OffsetStructure

OffsetStructure::OffsetStructure(std::span<const std::uint64_t> starts,
                                 const OffsetOptions& options)
    : kind_(options.kind),
      n_(starts.empty() ? 0 : starts.size() - 1),
      payload_bits_(starts.empty() ? 0 : starts.back()),
      unit_bits_(options.unit_bits),
      block_bits_(options.block_bits) {
  if (starts.empty()) throw DomainError("offset structure needs n+1 starts");
  if (unit_bits_ == 0) throw ConfigError("unit size must be positive");
  for (std::uint64_t v = 0; v < n_; ++v) {
    if (starts[v] > starts[v + 1]) throw DomainError("neighborhood starts must be nondecreasing");
  }

  if (!is_bitvector(kind_)) {
    std::vector<std::uint64_t> entries(starts.size());
    for (std::size_t v = 0; v < starts.size(); ++v) {
      if (starts[v] % unit_bits_ != 0) {
        throw ConfigError("neighborhood start not aligned to the " + std::to_string(unit_bits_) +
                          "-bit offset unit");
      }
      entries[v] = starts[v] / unit_bits_;
    }
    const unsigned width = kind_ == OffsetKind::kPtr32 ? 32 : kind_ == OffsetKind::kPtr64 ? 64 : 0;
    impl_ = OffsetArray(entries, width);
    return;
  }

  if (block_bits_ == 0) throw ConfigError("block size must be positive");
  if (payload_bits_ % block_bits_ != 0) throw ConfigError("payload end is not block aligned");
  auto check_aligned = [&](std::uint64_t v) {
    if (starts[v] % block_bits_ != 0) {
      throw ConfigError("neighborhood of vertex " + std::to_string(v) + " is not aligned to the " +
                        std::to_string(block_bits_) + "-bit block");
    }
  };
  const std::uint64_t sentinel = payload_bits_ / block_bits_;
  const auto flavor = static_cast<BitVectorFlavor>(static_cast<int>(kind_) - 3);
  std::vector<std::uint64_t> ones;
  ones.reserve(n_ + 1);
  if (flavor == BitVectorFlavor::kSparse) {
    for (std::uint64_t v = 0; v <= n_; ++v) {
      check_aligned(v);
      ones.push_back(starts[v] / block_bits_);
    }
    impl_ = OffsetBitVector(ones, sentinel + 1, flavor, options.interleave_period);
    return;
  }
  std::vector<std::uint64_t> nonempty_words((n_ + 63) / 64, 0);
  for (std::uint64_t v = 0; v < n_; ++v) {
    if (starts[v] == starts[v + 1]) continue;
    check_aligned(v);
    ones.push_back(starts[v] / block_bits_);
    nonempty_words[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  ones.push_back(sentinel);
  impl_ = OffsetBitVector(ones, sentinel + 1, flavor, options.interleave_period);
  nonempty_ = PlainBitVector(std::move(nonempty_words), n_);
}

void OffsetStructure::throw_out_of_range(VertexId v) const {
  throw DomainError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n_) +
                    ")");
}

std::pair<std::uint64_t, std::uint64_t> OffsetStructure::bitvector_bounds(VertexId v) const {
  const auto& bv = std::get<OffsetBitVector>(impl_);
  if (kind_ == OffsetKind::kBvSparse) {
    auto [first, second] = bv.select_pair(v + 1);
    return {first * block_bits_, second * block_bits_};
  }
  const std::uint64_t r = nonempty_.rank_before(v);
  if (!nonempty_[v]) {
    const std::uint64_t at = bv.select(r + 1) * block_bits_;
    return {at, at};
  }
  auto [first, second] = bv.select_pair(r + 1);
  return {first * block_bits_, second * block_bits_};
}

OffsetSizeReport OffsetStructure::size_report() const {
  OffsetSizeReport report;
  const double n = static_cast<double>(n_);
  const double payload = static_cast<double>(payload_bits_);
  if (const auto* a = array()) {
    report.raw_bits = a->bits();
    switch (kind_) {
      case OffsetKind::kPtr32: report.formula_bits = 32.0 * (n + 1); break;
      case OffsetKind::kPtr64: report.formula_bits = 64.0 * (n + 1); break;
      default:
        report.formula_bits = n * ceil_log2(payload_bits_ / unit_bits_);
        break;
    }
    return report;
  }
  const auto* bv = bitvector();
  report.raw_bits = bv->raw_bits();
  report.aux_bits = bv->aux_bits();
  report.side_bits = nonempty_.raw_bits() + nonempty_.aux_bits();
  const double blocks = payload / block_bits_;
  switch (kind_) {
    case OffsetKind::kBvPlain: report.formula_bits = blocks; break;
    case OffsetKind::kBvInterleaved:
      report.formula_bits =
          payload * (1.0 / block_bits_ + 64.0 / static_cast<double>(bv->interleave_period()));
      break;
    default:
      report.formula_bits = (n_ == 0 || payload_bits_ == 0) ? 0.0 : n * (2.0 + std::log2(blocks / n));
      break;
  }
  return report;
}

void OffsetStructure::write(BinaryWriter& out) const {
  out.u8(static_cast<std::uint8_t>(kind_));
  out.u64(n_);
  out.u64(payload_bits_);
  out.u32(unit_bits_);
  out.u32(block_bits_);
  if (const auto* a = array()) {
    a->write(out);
  } else {
    bitvector()->write(out);
    nonempty_.write(out);
  }
}

OffsetStructure OffsetStructure::read(BinaryReader& in) {
  OffsetStructure o;
  const std::uint8_t kind = in.u8();
  if (kind > 5) throw DecodeError("unknown offset structure kind");
  o.kind_ = static_cast<OffsetKind>(kind);
  o.n_ = in.u64();
  o.payload_bits_ = in.u64();
  o.unit_bits_ = in.u32();
  o.block_bits_ = in.u32();
  if (o.unit_bits_ == 0 || o.block_bits_ == 0) throw DecodeError("corrupt offset parameters");
  if (!is_bitvector(o.kind_)) {
    auto a = OffsetArray::read(in);
    if (a.size() != o.n_ + 1) throw DecodeError("offset array length mismatch");
    o.impl_ = std::move(a);
  } else {
    auto bv = OffsetBitVector::read(in);
    if (static_cast<int>(bv.flavor()) != kind - 3) throw DecodeError("bit-vector flavor mismatch");
    o.impl_ = std::move(bv);
    o.nonempty_ = PlainBitVector::read(in);
    if (o.kind_ == OffsetKind::kBvSparse) {
      if (o.nonempty_.size() != 0 || o.bitvector()->count_ones() != o.n_ + 1) {
        throw DecodeError("offset bit vector inconsistent with vertex count");
      }
    } else if (o.nonempty_.size() != o.n_ || o.bitvector()->count_ones() != o.nonempty_.count_ones() + 1) {
      throw DecodeError("offset bit vector inconsistent with vertex count");
    }
  }
  return o;
}

}  // namespace loggraph
