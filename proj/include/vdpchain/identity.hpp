#pragma once

#include <cstdint>

#include "vdpchain/bigint.hpp"
#include "vdpchain/bytes.hpp"

namespace vdpchain::identity {

// RSA-FDH keys: signatures are unique (RSA is a permutation) and deterministic,
// which is exactly what the VRF and the equivocation rules need
struct KeyPair {
    Bytes secret_key;  // opaque: lp(N) || lp(d) || lp(e)
    Bytes public_key;  // opaque: lp(N) || lp(e)
};

struct VrfResult {
    Bytes output_r;  // 32 bytes
    Bytes proof;     // the unique signature over the seed
};

using HeaderSignature = Bytes;

// deterministic from seed so simulation fixtures are reproducible
KeyPair keygen(ByteSpan seed, unsigned modulus_bits = 1024);

VrfResult vrf_eval(ByteSpan secret_key, ByteSpan seed);
bool vrf_verify(ByteSpan public_key, ByteSpan seed, const VrfResult& result);

HeaderSignature sign_header(ByteSpan secret_key, ByteSpan header_bytes);
bool verify_header_sig(ByteSpan public_key, ByteSpan header_bytes, ByteSpan signature);

Bytes public_key_of(ByteSpan secret_key);

}  // namespace vdpchain::identity
