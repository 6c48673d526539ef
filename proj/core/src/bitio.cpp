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

#include <string>

#include "loggraph/bitio.hpp"

namespace loggraph {

void BitWriter::write(std::uint64_t value, unsigned width) {
  if (width == 0) return;
  if (width < 64 && (value >> width) != 0) {
    throw EncodeError("value " + std::to_string(value) + " does not fit in " +
                      std::to_string(width) + " bits");
  }
  const std::uint64_t end = bits_ + width;
  bytes_.resize((end + 7) / 8 + kSlackBytes, 0);
  std::uint64_t pos = bits_;
  unsigned remaining = width;
  while (remaining > 0) {
    const unsigned in_byte = static_cast<unsigned>(pos & 7);
    const unsigned take = std::min(remaining, 8u - in_byte);
    bytes_[pos >> 3] |= static_cast<std::uint8_t>((value & low_mask(take)) << in_byte);
    value >>= take;
    pos += take;
    remaining -= take;
  }
  bits_ = end;
}

void BitWriter::write_varint(std::uint64_t value) {
  while (value >= 0x80) {
    write((value & 0x7F) | 0x80, 8);
    value >>= 7;
  }
  write(value, 8);
}

void BitWriter::align(unsigned block_bits, bool fill) {
  if (block_bits <= 1) return;
  const std::uint64_t rem = bits_ % block_bits;
  if (rem == 0) return;
  std::uint64_t pad = block_bits - rem;
  while (pad > 0) {
    const unsigned chunk = static_cast<unsigned>(std::min<std::uint64_t>(pad, 64));
    write(fill ? low_mask(chunk) : 0, chunk);
    pad -= chunk;
  }
}

std::vector<std::uint8_t> BitWriter::finish() && {
  bytes_.resize((bits_ + 7) / 8 + kSlackBytes, 0);
  return std::move(bytes_);
}

PackedArray::PackedArray(std::span<const std::uint64_t> values, unsigned width)
    : width_(width), count_(values.size()) {
  if (width == 0 || width > 64) throw EncodeError("packed width must be in [1, 64]");
  BitWriter writer;
  for (std::uint64_t v : values) {
    if (width < 64 && (v >> width) != 0) {
      throw EncodeError("value " + std::to_string(v) + " does not fit in " + std::to_string(width) + " bits");
    }
    writer.write(v, width);
  }
  payload_ = std::move(writer).finish();
}

PackedArray PackedArray::from_bytes(std::vector<std::uint8_t> payload, unsigned width,
                                    std::uint64_t count) {
  if (width == 0 || width > 64) throw DecodeError("packed width must be in [1, 64]");
  const std::uint64_t need = (count * width + 7) / 8 + kSlackBytes;
  if (payload.size() < need) payload.resize(need, 0);
  PackedArray pa;
  pa.payload_ = std::move(payload);
  pa.width_ = width;
  pa.count_ = count;
  return pa;
}

void varint_encode(std::uint64_t value, std::vector<std::uint8_t>& out) {
  while (value >= 0x80) {
    out.push_back(static_cast<std::uint8_t>((value & 0x7F) | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(value));
}

std::vector<std::uint8_t> varint_encode(std::uint64_t value) {
  std::vector<std::uint8_t> out;
  varint_encode(value, out);
  return out;
}

std::pair<std::uint64_t, std::size_t> varint_decode(std::span<const std::uint8_t> bytes,
                                                    std::size_t pos) {
  std::uint64_t value = 0;
  unsigned shift = 0;
  while (true) {
    if (pos >= bytes.size()) throw DecodeError("truncated varint");
    if (shift > 63) throw DecodeError("varint longer than 64 bits");
    const std::uint8_t byte = bytes[pos++];
    value |= static_cast<std::uint64_t>(byte & 0x7F) << shift;
    if ((byte & 0x80) == 0) return {value, pos};
    shift += 7;
  }
}

std::vector<std::uint64_t> VarintStream::decode_all() const {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  std::size_t pos = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    auto [value, next] = varint_decode(payload, pos);
    out.push_back(value);
    pos = next;
  }
  return out;
}

}  // namespace loggraph
