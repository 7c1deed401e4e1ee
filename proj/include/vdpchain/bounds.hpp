#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <vector>

namespace vdpchain::bounds {

struct BackboneParams {
    double lambda_h = 0;   // honest block rate
    double lambda_a = 0;   // adversary rate under honest behavior
    double T = 0;          // duration
    double delta = 0.2;    // Chernoff slack, in (0,1)
    double x = 0;          // tail offset for the BFS bound
    double round_delta = 1.0;

    void validate() const;
};

// normalized s_i*q_i per Eq for speed-weighted stake
std::vector<double> speed_weighted_stakes(const std::vector<double>& stakes,
                                          const std::vector<double>& speeds);

// Pr(D_a(T) > e*lambda_a*T + x) <= e^(-x)
double bfs_tail_bound(const BackboneParams& p);

// Pr(D_h(T) < (1-delta)*lambda_h*T) <= 2 e^(-lambda_h T delta^2 / 3), clamped to [0,1]
double chernoff_growth_bound(const BackboneParams& p);

struct GapBound {
    double nu = 0;                // (lambda_h - e*lambda_a) / 3
    double zeta = 0;              // min(nu^2 / (3 lambda_h), nu)
    double prob_lower_bound = 0;  // (1 - 2 e^(-zeta T))^2 clamped to [0,1]
    bool vacuous = false;         // lambda_h <= e*lambda_a
};

GapBound gap_bound(const BackboneParams& p);

// two-part upper bound on the expected private-fork reward; nullopt in the vacuous regime
std::optional<double> attacker_reward_bound(const BackboneParams& p, double block_reward);

struct LongRangeParams {
    double alpha_h = 0;    // honest stake fraction at the confirmed head
    double p_s = 0;        // per-height staking probability
    double l_c = 0;        // confirmed head height
    double l_a = 0;        // fork height, l_a < l_c
    double lambda_h = 0;   // honest blocks per time unit

    double depth() const { return l_c - l_a; }
    void validate() const;
};

// p_s*(l_c-l_a)*alpha_h + (1-alpha_h), clamped to [0,1]
double adversary_stake_bound(const LongRangeParams& p);

// alpha_h above which the attack from this depth fails: (1 + 1/e - p_s*depth)^(-1);
// nullopt when the denominator is <= 0 (attack viable for any alpha_h)
std::optional<double> long_range_alpha_threshold(double p_s, double depth);

// depth below which the attack fails for a given alpha_h: (1 + 1/e - 1/alpha_h) / p_s
double long_range_depth_threshold(double alpha_h, double p_s);

// minimum attack duration; nullopt when the attack is infeasible at this depth
std::optional<double> long_range_min_time(const LongRangeParams& p);

// depth -> infinity limit of the minimum attack duration: 1 / (lambda_h e p_s)
double long_range_min_time_asymptote(const LongRangeParams& p);

nlohmann::json bound_table(const nlohmann::json& config);

}  // namespace vdpchain::bounds
