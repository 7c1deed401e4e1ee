#include "vdpchain/bigint.hpp"

#include <stdexcept>
#include <vector>

namespace vdpchain {

mpz_class bytes_to_mpz(ByteSpan be) {
    mpz_class v;
    if (be.empty()) return 0;
    mpz_import(v.get_mpz_t(), be.size(), 1 /*msb first*/, 1, 1, 0, be.data());
    return v;
}

Bytes mpz_to_bytes(const mpz_class& v, std::size_t width) {
    if (sgn(v) < 0) throw std::invalid_argument("cannot encode negative value");
    std::size_t need = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
    if (v == 0) need = 0;
    if (need > width) throw std::invalid_argument("value too large for encoding width");
    Bytes out(width, 0);
    if (need > 0) {
        std::size_t written = 0;
        mpz_export(out.data() + (width - need), &written, 1, 1, 1, 0, v.get_mpz_t());
    }
    return out;
}

Bytes mpz_to_bytes_minimal(const mpz_class& v) {
    std::size_t need = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
    if (v == 0) return {};
    return mpz_to_bytes(v, need);
}

mpz_class mpz_from_hex(const std::string& hex) {
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), hex.c_str(), 16) != 0) {
        throw std::invalid_argument("invalid hex integer: " + hex);
    }
    return v;
}

std::string mpz_to_hex(const mpz_class& v) {
    return v.get_str(16);
}

namespace {

bool miller_rabin_witness(const mpz_class& n, const mpz_class& a, const mpz_class& d, unsigned r) {
    mpz_class x = powm(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness found
}

}  // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    static const unsigned small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned p : small_primes) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    // the witness set {2..37} is deterministic below 3.317e24 (> 2^81)
    static const mpz_class deterministic_limit("3317044064679887385961981");
    if (n < deterministic_limit) {
        mpz_class d = n - 1;
        unsigned r = 0;
        while (mpz_even_p(d.get_mpz_t())) {
            d >>= 1;
            ++r;
        }
        for (unsigned a : small_primes) {
            if (miller_rabin_witness(n, a, d, r)) return false;
        }
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 50) > 0;
}

mpz_class next_prime_at_least(mpz_class n) {
    if (n <= 2) return 2;
    if (mpz_even_p(n.get_mpz_t())) n += 1;
    while (!is_prime(n)) n += 2;
    return n;
}

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
    mpz_class out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return out;
}

mpz_class powm_u64(const mpz_class& base, std::uint64_t exp, const mpz_class& mod) {
    mpz_class out;
    mpz_powm_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp), mod.get_mpz_t());
    return out;
}

mpz_class mpz_from_u64(std::uint64_t v) {
    mpz_class out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return out;
}

}  // namespace vdpchain
