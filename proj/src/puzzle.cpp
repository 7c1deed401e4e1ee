#include "vdpchain/puzzle.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

#include "vdpchain/hash.hpp"

namespace vdpchain::puzzle {

PuzzleParams PuzzleParams::create(mpq_class gamma, vdf::VdfParams vdf) {
    PuzzleParams p;
    p.gamma = std::move(gamma);
    p.gamma.canonicalize();
    p.max_hash = (mpz_class(1) << 256) - 1;
    p.vdf = std::move(vdf);
    p.validate();
    return p;
}

void PuzzleParams::validate() const {
    vdf.validate();
    if (gamma <= 0 || gamma > 1) throw std::invalid_argument("gamma must be in (0, 1]");
    if (max_hash < 1) throw std::invalid_argument("max_hash must be positive");
    if (!threshold_override && threshold(*this) < 1) {
        throw std::invalid_argument("threshold floor(gamma*max_hash) must be >= 1");
    }
}

mpz_class threshold(const PuzzleParams& params) {
    if (params.threshold_override) return *params.threshold_override;
    mpz_class num = params.gamma.get_num() * params.max_hash;
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), params.gamma.get_den().get_mpz_t());
    return out;
}

mpz_class threshold_hash(const vdf::GroupElement& d, const PuzzleParams& params) {
    return bytes_to_mpz(sha256(vdf::encode_element(d, params.vdf)));
}

PuzzleInstance PuzzleInstance::derive(Bytes input_r, const PuzzleParams& params) {
    PuzzleInstance inst;
    inst.base = vdf::hash_to_group(input_r, params.vdf);
    inst.input_r = std::move(input_r);
    return inst;
}

Bytes PuzzleSolution::serialize(const PuzzleParams& params) const {
    Bytes out = be64_bytes(t);
    Bytes db = vdf::encode_element(d, params.vdf);
    out.insert(out.end(), db.begin(), db.end());
    Bytes pb = proof.serialize(params.vdf);
    out.insert(out.end(), pb.begin(), pb.end());
    return out;
}

PuzzleSolution PuzzleSolution::parse(ByteSpan bytes, const PuzzleParams& params) {
    std::size_t esz = params.vdf.element_size();
    if (bytes.size() < 8 + 2 * esz) throw std::invalid_argument("solution bytes too short");
    PuzzleSolution sol;
    std::uint64_t t = 0;
    for (int i = 0; i < 8; ++i) t = (t << 8) | bytes[i];
    sol.t = t;
    sol.d = vdf::decode_element(bytes.subspan(8, esz));
    sol.proof = vdf::VdfProof::parse(bytes.subspan(8 + esz), params.vdf);
    return sol;
}

SolveResult solve(const PuzzleInstance& instance, const PuzzleParams& params,
                  std::optional<std::uint64_t> budget, const CancelToken* cancel) {
    const mpz_class m = threshold(params);
    const mpz_class& n = params.vdf.modulus;
    mpz_class cur = instance.base.value;
    std::uint64_t t = 0;
    while (true) {
        if (cancel && cancel->cancelled()) return {SolveStatus::cancelled, std::nullopt, t};
        if (budget && t >= *budget) return {SolveStatus::budget_exhausted, std::nullopt, t};
        cur = (cur * cur) % n;
        ++t;
        vdf::GroupElement d{cur};
        if (threshold_hash(d, params) <= m) {
            PuzzleSolution sol;
            sol.t = t;
            sol.d = d;
            sol.proof = vdf::prove(instance.base, t, d, params.vdf);
            return {SolveStatus::solved, std::move(sol), t};
        }
    }
}

SolutionVerdict verify_solution(const PuzzleInstance& instance, const PuzzleSolution& solution,
                                const PuzzleParams& params) {
    if (solution.t == 0) return SolutionVerdict::reject_t_too_small;
    if (vdf::verify_vdf(instance.base, solution.t, solution.d, solution.proof, params.vdf) !=
        vdf::VdfVerdict::accept) {
        return SolutionVerdict::reject_vdf_invalid;
    }
    if (threshold_hash(solution.d, params) > threshold(params)) {
        return SolutionVerdict::reject_threshold_unmet;
    }
    return SolutionVerdict::accept;
}

const char* verdict_name(SolutionVerdict v) {
    switch (v) {
        case SolutionVerdict::accept: return "accept";
        case SolutionVerdict::reject_t_too_small: return "t_too_small";
        case SolutionVerdict::reject_vdf_invalid: return "vdf_invalid";
        case SolutionVerdict::reject_threshold_unmet: return "threshold_unmet";
    }
    return "unknown";
}

mpq_class rational_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        mpq_class q(j.get<std::string>());
        q.canonicalize();
        return q;
    }
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (j.is_number_float()) {
        mpq_class q;
        mpq_set_d(q.get_mpq_t(), j.get<double>());
        return q;
    }
    throw std::invalid_argument("expected rational as string \"a/b\" or number");
}

PuzzleParams params_from_json(const nlohmann::json& j) {
    return PuzzleParams::create(rational_from_json(j.at("gamma")), vdf::params_from_json(j.at("vdf")));
}

nlohmann::json params_to_json(const PuzzleParams& params) {
    return nlohmann::json{{"gamma", params.gamma.get_str()}, {"vdf", vdf::params_to_json(params.vdf)}};
}

}  // namespace vdpchain::puzzle
