#include "vdpchain/vdf.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

#include "vdpchain/hash.hpp"

namespace vdpchain::vdf {

VdfParams VdfParams::create(mpz_class modulus, unsigned security_param, HashToGroupMode mode) {
    VdfParams p;
    p.modulus = std::move(modulus);
    p.modulus_bits = static_cast<unsigned>(mpz_sizeinbase(p.modulus.get_mpz_t(), 2));
    p.security_param = security_param;
    p.hash_mode = mode;
    p.validate();
    return p;
}

void VdfParams::validate() const {
    if (modulus < 15) throw std::invalid_argument("modulus must be >= 15");
    if (mpz_even_p(modulus.get_mpz_t())) throw std::invalid_argument("modulus must be odd");
    unsigned actual_bits = static_cast<unsigned>(mpz_sizeinbase(modulus.get_mpz_t(), 2));
    if (actual_bits != modulus_bits) throw std::invalid_argument("modulus_bits inconsistent with modulus");
    if (security_param < 2) throw std::invalid_argument("security_param must be >= 2");
    if (hash_mode == HashToGroupMode::production && security_param < 16) {
        throw std::invalid_argument("security_param must be >= 16 in production mode");
    }
}

bool element_in_range(const GroupElement& e, const VdfParams& params) {
    return e.value >= 1 && e.value <= params.modulus - 1;
}

Bytes encode_element(const GroupElement& e, const VdfParams& params) {
    return mpz_to_bytes(e.value, params.element_size());
}

GroupElement decode_element(ByteSpan bytes) {
    return GroupElement{bytes_to_mpz(bytes)};
}

GroupElement hash_to_group(ByteSpan input, const VdfParams& params) {
    const mpz_class& n = params.modulus;
    for (std::uint32_t counter = 0;; ++counter) {
        mpz_class h;
        if (params.hash_mode == HashToGroupMode::test_passthrough) {
            h = (bytes_to_mpz(input) + counter) % n;
        } else {
            Bytes material(input.begin(), input.end());
            if (counter > 0) append_be32(material, counter);
            h = bytes_to_mpz(sha256(material)) % n;
        }
        if (h == 0) continue;
        // squaring lands the element in the quadratic residues
        mpz_class sq = (h * h) % n;
        if (sq == 0) continue;
        return GroupElement{sq};
    }
}

EvalState eval_step(const EvalState& state, const VdfParams& params) {
    EvalState next = state;
    next.current.value = (state.current.value * state.current.value) % params.modulus;
    next.steps_done = state.steps_done + 1;
    return next;
}

GroupElement eval_to(const GroupElement& g, std::uint64_t t, const VdfParams& params) {
    mpz_class cur = g.value;
    for (std::uint64_t i = 0; i < t; ++i) {
        cur = (cur * cur) % params.modulus;
    }
    return GroupElement{cur};
}

mpz_class derive_challenge_prime(const GroupElement& g, const GroupElement& d, std::uint64_t t,
                                 const VdfParams& params) {
    Bytes ge = encode_element(g, params);
    Bytes de = encode_element(d, params);
    Bytes te = be64_bytes(t);

    // expand a SHA-256 counter stream to security_param bits, force the top bit,
    // then take the next prime
    const std::size_t nbytes = (params.security_param + 7) / 8;
    Bytes stream;
    std::uint32_t counter = 0;
    while (stream.size() < nbytes) {
        Digest block = tagged_hash("vdf/challenge", {ByteSpan(ge), ByteSpan(de), ByteSpan(te),
                                                     ByteSpan(be64_bytes(counter))});
        stream.insert(stream.end(), block.begin(), block.end());
        ++counter;
    }
    stream.resize(nbytes);
    mpz_class candidate = bytes_to_mpz(stream);
    unsigned bits = params.security_param;
    mpz_class top = mpz_class(1) << (bits - 1);
    candidate %= top;        // keep below 2^(bits-1)
    candidate += top;        // force exactly `bits` bits
    return next_prime_at_least(candidate);
}

GroupElement quotient_power(const GroupElement& g, std::uint64_t t, const mpz_class& ell,
                            const VdfParams& params) {
    // long division of 2^t by ell carried in the exponent:
    // pi accumulates g^quotient bit by bit while r tracks the running remainder
    const mpz_class& n = params.modulus;
    mpz_class pi = 1;
    mpz_class r = 1;
    for (std::uint64_t i = 0; i < t; ++i) {
        r <<= 1;
        pi = (pi * pi) % n;
        if (r >= ell) {
            r -= ell;
            pi = (pi * g.value) % n;
        }
    }
    return GroupElement{pi};
}

VdfProof prove(const GroupElement& g, std::uint64_t t, const GroupElement& d, const VdfParams& params) {
    mpz_class ell = derive_challenge_prime(g, d, t, params);
    return VdfProof{quotient_power(g, t, ell, params), ell};
}

VdfVerdict verify_vdf(const GroupElement& g, std::uint64_t t, const GroupElement& d,
                      const VdfProof& proof, const VdfParams& params) {
    if (!element_in_range(g, params) || !element_in_range(d, params) ||
        !element_in_range(proof.quotient, params)) {
        return VdfVerdict::reject_malformed_element;
    }
    mpz_class ell = derive_challenge_prime(g, d, t, params);
    if (proof.challenge_prime != ell) return VdfVerdict::reject_challenge_mismatch;
    // accept iff pi^ell * g^(2^t mod ell) = d
    mpz_class residue = powm(mpz_class(2), mpz_from_u64(t), ell);
    mpz_class lhs = (powm(proof.quotient.value, ell, params.modulus) *
                     powm(g.value, residue, params.modulus)) %
                    params.modulus;
    return lhs == d.value ? VdfVerdict::accept : VdfVerdict::reject_equation;
}

const char* verdict_name(VdfVerdict v) {
    switch (v) {
        case VdfVerdict::accept: return "accept";
        case VdfVerdict::reject_malformed_element: return "malformed_element";
        case VdfVerdict::reject_challenge_mismatch: return "challenge_mismatch";
        case VdfVerdict::reject_equation: return "equation_failed";
    }
    return "unknown";
}

Bytes VdfProof::serialize(const VdfParams& params) const {
    Bytes out = encode_element(quotient, params);
    Bytes ell = mpz_to_bytes_minimal(challenge_prime);
    out.insert(out.end(), ell.begin(), ell.end());
    return out;
}

VdfProof VdfProof::parse(ByteSpan bytes, const VdfParams& params) {
    std::size_t esz = params.element_size();
    if (bytes.size() < esz) throw std::invalid_argument("proof bytes too short");
    VdfProof p;
    p.quotient = decode_element(bytes.subspan(0, esz));
    p.challenge_prime = bytes_to_mpz(bytes.subspan(esz));
    return p;
}

VdfParams params_from_json(const nlohmann::json& j) {
    mpz_class modulus = mpz_from_hex(j.at("modulus_hex").get<std::string>());
    unsigned security = j.value("security_param", 128u);
    HashToGroupMode mode = HashToGroupMode::production;
    if (j.value("hash_to_group", std::string("production")) == std::string("test_passthrough")) {
        mode = HashToGroupMode::test_passthrough;
    }
    return VdfParams::create(std::move(modulus), security, mode);
}

nlohmann::json params_to_json(const VdfParams& params) {
    return nlohmann::json{{"modulus_hex", mpz_to_hex(params.modulus)},
                          {"security_param", params.security_param},
                          {"hash_to_group", params.hash_mode == HashToGroupMode::test_passthrough
                                                ? "test_passthrough"
                                                : "production"}};
}

}  // namespace vdpchain::vdf
