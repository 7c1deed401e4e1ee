#include "vdpchain/bytes.hpp"

#include <stdexcept>

namespace vdpchain {

Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

std::string to_hex(ByteSpan data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

namespace {
int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("invalid hex character");
}
}  // namespace

Bytes from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex string");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        out.push_back(static_cast<std::uint8_t>((hex_nibble(hex[i]) << 4) | hex_nibble(hex[i + 1])));
    }
    return out;
}

void append_be32(Bytes& out, std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) {
        out.push_back(static_cast<std::uint8_t>(v >> shift));
    }
}

void append_be64(Bytes& out, std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) {
        out.push_back(static_cast<std::uint8_t>(v >> shift));
    }
}

Bytes be64_bytes(std::uint64_t v) {
    Bytes out;
    append_be64(out, v);
    return out;
}

void append_length_prefixed(Bytes& out, ByteSpan payload) {
    append_be32(out, static_cast<std::uint32_t>(payload.size()));
    out.insert(out.end(), payload.begin(), payload.end());
}

Bytes read_length_prefixed(ByteSpan data, std::size_t& offset) {
    if (offset + 4 > data.size()) throw std::out_of_range("truncated length prefix");
    std::uint32_t len = 0;
    for (int i = 0; i < 4; ++i) len = (len << 8) | data[offset + i];
    offset += 4;
    if (offset + len > data.size()) throw std::out_of_range("truncated field");
    Bytes out(data.begin() + offset, data.begin() + offset + len);
    offset += len;
    return out;
}

}  // namespace vdpchain
