#include "vdpchain/identity.hpp"

#include <stdexcept>

#include "vdpchain/hash.hpp"

namespace vdpchain::identity {

namespace {

struct RsaSecret {
    mpz_class n, d, e;
};
struct RsaPublic {
    mpz_class n, e;
};

Bytes serialize_fields(std::initializer_list<const mpz_class*> fields) {
    Bytes out;
    for (const mpz_class* f : fields) append_length_prefixed(out, mpz_to_bytes_minimal(*f));
    return out;
}

RsaSecret parse_secret(ByteSpan sk) {
    std::size_t off = 0;
    RsaSecret s;
    s.n = bytes_to_mpz(read_length_prefixed(sk, off));
    s.d = bytes_to_mpz(read_length_prefixed(sk, off));
    s.e = bytes_to_mpz(read_length_prefixed(sk, off));
    if (s.n < 2) throw std::invalid_argument("malformed secret key");
    return s;
}

RsaPublic parse_public(ByteSpan pk) {
    std::size_t off = 0;
    RsaPublic p;
    p.n = bytes_to_mpz(read_length_prefixed(pk, off));
    p.e = bytes_to_mpz(read_length_prefixed(pk, off));
    if (p.n < 2 || p.e < 3) throw std::invalid_argument("malformed public key");
    return p;
}

// SHA-256 counter stream over (tag, seed)
Bytes derive_stream(std::string_view tag, ByteSpan seed, std::size_t nbytes) {
    Bytes out;
    std::uint64_t counter = 0;
    while (out.size() < nbytes) {
        Digest block = tagged_hash(tag, {seed, ByteSpan(be64_bytes(counter))});
        out.insert(out.end(), block.begin(), block.end());
        ++counter;
    }
    out.resize(nbytes);
    return out;
}

mpz_class derive_prime(std::string_view tag, ByteSpan seed, unsigned bits) {
    Bytes material = derive_stream(tag, seed, (bits + 7) / 8);
    mpz_class candidate = bytes_to_mpz(material);
    mpz_class top = mpz_class(1) << (bits - 1);
    candidate %= top >> 1;
    candidate += top + (top >> 1);  // force the top two bits so n = p*q has full width
    return next_prime_at_least(candidate);
}

// full-domain hash into [2, n-1]
mpz_class fdh(std::string_view tag, ByteSpan message, const mpz_class& n) {
    std::size_t nbytes = (mpz_sizeinbase(n.get_mpz_t(), 2) + 7) / 8 + 8;
    Bytes stream = derive_stream(tag, message, nbytes);
    mpz_class h = bytes_to_mpz(stream) % n;
    if (h < 2) h += 2;
    return h;
}

Bytes rsa_sign(std::string_view tag, ByteSpan secret_key, ByteSpan message) {
    RsaSecret sk = parse_secret(secret_key);
    mpz_class h = fdh(tag, message, sk.n);
    mpz_class sig = powm(h, sk.d, sk.n);
    return mpz_to_bytes(sig, (mpz_sizeinbase(sk.n.get_mpz_t(), 2) + 7) / 8);
}

bool rsa_verify(std::string_view tag, ByteSpan public_key, ByteSpan message, ByteSpan signature) {
    RsaPublic pk;
    try {
        pk = parse_public(public_key);
    } catch (const std::exception&) {
        return false;
    }
    mpz_class sig = bytes_to_mpz(signature);
    if (sig < 1 || sig >= pk.n) return false;
    return powm(sig, pk.e, pk.n) == fdh(tag, message, pk.n);
}

constexpr std::string_view kVrfTag = "identity/vrf";
constexpr std::string_view kHeaderTag = "identity/header";

}  // namespace

KeyPair keygen(ByteSpan seed, unsigned modulus_bits) {
    if (seed.empty()) throw std::invalid_argument("keygen seed must be nonempty");
    if (modulus_bits < 128) throw std::invalid_argument("modulus_bits must be >= 128");
    unsigned half = modulus_bits / 2;
    const mpz_class e = 65537;
    for (std::uint32_t attempt = 0;; ++attempt) {
        Bytes salted(seed.begin(), seed.end());
        if (attempt > 0) append_be32(salted, attempt);
        mpz_class p = derive_prime("identity/prime-p", salted, half);
        mpz_class q = derive_prime("identity/prime-q", salted, half);
        if (p == q) continue;
        mpz_class lambda;
        mpz_lcm(lambda.get_mpz_t(), mpz_class(p - 1).get_mpz_t(), mpz_class(q - 1).get_mpz_t());
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), lambda.get_mpz_t());
        if (g != 1) continue;
        mpz_class d;
        mpz_invert(d.get_mpz_t(), e.get_mpz_t(), lambda.get_mpz_t());
        mpz_class n = p * q;
        KeyPair kp;
        kp.secret_key = serialize_fields({&n, &d, &e});
        kp.public_key = serialize_fields({&n, &e});
        return kp;
    }
}

Bytes public_key_of(ByteSpan secret_key) {
    RsaSecret sk = parse_secret(secret_key);
    return serialize_fields({&sk.n, &sk.e});
}

VrfResult vrf_eval(ByteSpan secret_key, ByteSpan seed) {
    VrfResult out;
    out.proof = rsa_sign(kVrfTag, secret_key, seed);
    out.output_r = sha256_bytes(out.proof);
    return out;
}

bool vrf_verify(ByteSpan public_key, ByteSpan seed, const VrfResult& result) {
    if (!rsa_verify(kVrfTag, public_key, seed, result.proof)) return false;
    return result.output_r == sha256_bytes(result.proof);
}

HeaderSignature sign_header(ByteSpan secret_key, ByteSpan header_bytes) {
    return rsa_sign(kHeaderTag, secret_key, header_bytes);
}

bool verify_header_sig(ByteSpan public_key, ByteSpan header_bytes, ByteSpan signature) {
    return rsa_verify(kHeaderTag, public_key, header_bytes, signature);
}

}  // namespace vdpchain::identity
