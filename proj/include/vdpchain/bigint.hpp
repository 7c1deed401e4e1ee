#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "vdpchain/bytes.hpp"

namespace vdpchain {

mpz_class bytes_to_mpz(ByteSpan be);

// big-endian, zero-padded to exactly `width` bytes; throws if the value needs more
Bytes mpz_to_bytes(const mpz_class& v, std::size_t width);

// minimal-length big-endian encoding (empty for zero)
Bytes mpz_to_bytes_minimal(const mpz_class& v);

mpz_class mpz_from_hex(const std::string& hex);
std::string mpz_to_hex(const mpz_class& v);

// deterministic Miller-Rabin below ~3.3e24, BPSW-style probable-prime test above
bool is_prime(const mpz_class& n);
mpz_class next_prime_at_least(mpz_class n);

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod);
mpz_class powm_u64(const mpz_class& base, std::uint64_t exp, const mpz_class& mod);

mpz_class mpz_from_u64(std::uint64_t v);

}  // namespace vdpchain
