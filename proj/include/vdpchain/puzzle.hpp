#pragma once

#include <atomic>
#include <memory>
#include <nlohmann/json_fwd.hpp>
#include <optional>

#include "vdpchain/vdf.hpp"

namespace vdpchain::puzzle {

// difficulty gamma plus the underlying delay-function parameters;
// K is the 256-bit digest of the canonical d encoding, M = 2^256 - 1
struct PuzzleParams {
    mpq_class gamma;
    mpz_class max_hash;
    vdf::VdfParams vdf;
    std::optional<mpz_class> threshold_override;  // test hook

    static PuzzleParams create(mpq_class gamma, vdf::VdfParams vdf);
    void validate() const;
};

mpz_class threshold(const PuzzleParams& params);  // floor(gamma * max_hash)

// K(d): digest of the canonical encoding read as an unsigned big-endian integer
mpz_class threshold_hash(const vdf::GroupElement& d, const PuzzleParams& params);

struct PuzzleInstance {
    Bytes input_r;
    vdf::GroupElement base;

    static PuzzleInstance derive(Bytes input_r, const PuzzleParams& params);
};

struct PuzzleSolution {
    std::uint64_t t = 0;
    vdf::GroupElement d;
    vdf::VdfProof proof;

    // t (u64 BE) || d canonical || pi canonical || ell (minimal BE)
    Bytes serialize(const PuzzleParams& params) const;
    static PuzzleSolution parse(ByteSpan bytes, const PuzzleParams& params);
};

// fired from another thread to abandon a running solve
class CancelToken {
  public:
    CancelToken() : flag_(std::make_shared<std::atomic<bool>>(false)) {}
    void cancel() { flag_->store(true, std::memory_order_relaxed); }
    bool cancelled() const { return flag_->load(std::memory_order_relaxed); }

  private:
    std::shared_ptr<std::atomic<bool>> flag_;
};

enum class SolveStatus { solved, cancelled, budget_exhausted };

struct SolveResult {
    SolveStatus status;
    std::optional<PuzzleSolution> solution;
    std::uint64_t steps_done = 0;
};

SolveResult solve(const PuzzleInstance& instance, const PuzzleParams& params,
                  std::optional<std::uint64_t> budget = std::nullopt,
                  const CancelToken* cancel = nullptr);

enum class SolutionVerdict {
    accept,
    reject_t_too_small,
    reject_vdf_invalid,
    reject_threshold_unmet,
};

SolutionVerdict verify_solution(const PuzzleInstance& instance, const PuzzleSolution& solution,
                                const PuzzleParams& params);

const char* verdict_name(SolutionVerdict v);

PuzzleParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const PuzzleParams& params);

// "a/b" or a JSON number (converted via its exact binary value)
mpq_class rational_from_json(const nlohmann::json& j);

}  // namespace vdpchain::puzzle
