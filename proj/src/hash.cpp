#include "vdpchain/hash.hpp"

#include <openssl/sha.h>

namespace vdpchain {

Digest sha256(ByteSpan data) {
    Digest out;
    SHA256(data.data(), data.size(), out.data());
    return out;
}

Bytes sha256_bytes(ByteSpan data) {
    Digest d = sha256(data);
    return Bytes(d.begin(), d.end());
}

Digest tagged_hash(std::string_view tag, std::initializer_list<ByteSpan> parts) {
    Bytes buf = to_bytes(tag);
    for (ByteSpan p : parts) append_length_prefixed(buf, p);
    return sha256(buf);
}

Bytes digest_to_bytes(const Digest& d) {
    return Bytes(d.begin(), d.end());
}

}  // namespace vdpchain
