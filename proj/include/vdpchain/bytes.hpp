#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vdpchain {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

Bytes to_bytes(std::string_view s);

std::string to_hex(ByteSpan data);
Bytes from_hex(std::string_view hex);

// big-endian fixed-width integer encodings
void append_be32(Bytes& out, std::uint32_t v);
void append_be64(Bytes& out, std::uint64_t v);
Bytes be64_bytes(std::uint64_t v);

// 4-byte big-endian length prefix followed by the payload
void append_length_prefixed(Bytes& out, ByteSpan payload);

// reads one length-prefixed field starting at offset; advances offset
Bytes read_length_prefixed(ByteSpan data, std::size_t& offset);

}  // namespace vdpchain
