#pragma once

#include <array>
#include <initializer_list>

#include "vdpchain/bytes.hpp"

namespace vdpchain {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(ByteSpan data);
Bytes sha256_bytes(ByteSpan data);

// digest of tag || len-prefixed parts; the workhorse for transcripts
Digest tagged_hash(std::string_view tag, std::initializer_list<ByteSpan> parts);

Bytes digest_to_bytes(const Digest& d);

}  // namespace vdpchain
