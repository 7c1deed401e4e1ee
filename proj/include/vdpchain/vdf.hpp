#pragma once

#include <cstdint>
#include <nlohmann/json_fwd.hpp>

#include "vdpchain/bigint.hpp"
#include "vdpchain/bytes.hpp"

namespace vdpchain::vdf {

enum class HashToGroupMode { production, test_passthrough };

// sequential squaring group Z*_N with a hidden order; modulus comes from config
struct VdfParams {
    mpz_class modulus;
    unsigned modulus_bits = 0;
    unsigned security_param = 128;  // challenge-prime size in bits
    HashToGroupMode hash_mode = HashToGroupMode::production;

    static VdfParams create(mpz_class modulus, unsigned security_param,
                            HashToGroupMode mode = HashToGroupMode::production);

    std::size_t element_size() const { return (modulus_bits + 7) / 8; }
    void validate() const;  // throws std::invalid_argument
};

struct GroupElement {
    mpz_class value;  // in [1, N-1]

    bool operator==(const GroupElement&) const = default;
};

bool element_in_range(const GroupElement& e, const VdfParams& params);

// canonical big-endian encoding, zero-padded to modulus_bits/8 bytes
Bytes encode_element(const GroupElement& e, const VdfParams& params);
GroupElement decode_element(ByteSpan bytes);

struct EvalState {
    GroupElement base;
    GroupElement current;
    std::uint64_t steps_done = 0;
};

struct VdfProof {
    GroupElement quotient;      // pi = g^floor(2^t / ell)
    mpz_class challenge_prime;  // ell, re-derivable from the transcript (g, d, t)

    Bytes serialize(const VdfParams& params) const;
    static VdfProof parse(ByteSpan bytes, const VdfParams& params);
};

GroupElement hash_to_group(ByteSpan input, const VdfParams& params);

EvalState eval_step(const EvalState& state, const VdfParams& params);
GroupElement eval_to(const GroupElement& g, std::uint64_t t, const VdfParams& params);

mpz_class derive_challenge_prime(const GroupElement& g, const GroupElement& d, std::uint64_t t,
                                 const VdfParams& params);

VdfProof prove(const GroupElement& g, std::uint64_t t, const GroupElement& d, const VdfParams& params);

// pinned-challenge variant used by tests and by prove() internally
GroupElement quotient_power(const GroupElement& g, std::uint64_t t, const mpz_class& ell,
                            const VdfParams& params);

enum class VdfVerdict {
    accept,
    reject_malformed_element,
    reject_challenge_mismatch,
    reject_equation,
};

VdfVerdict verify_vdf(const GroupElement& g, std::uint64_t t, const GroupElement& d,
                      const VdfProof& proof, const VdfParams& params);

const char* verdict_name(VdfVerdict v);

VdfParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const VdfParams& params);

}  // namespace vdpchain::vdf
