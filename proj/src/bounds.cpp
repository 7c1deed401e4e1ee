#include "vdpchain/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <numbers>
#include <stdexcept>

namespace vdpchain::bounds {

namespace {
constexpr double kE = std::numbers::e;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }
}  // namespace

void BackboneParams::validate() const {
    if (lambda_h < 0 || lambda_a < 0) throw std::invalid_argument("rates must be >= 0");
    if (T < 0) throw std::invalid_argument("T must be >= 0");
    if (delta <= 0 || delta >= 1) throw std::invalid_argument("delta must be in (0,1)");
    if (x < 0) throw std::invalid_argument("x must be >= 0");
}

std::vector<double> speed_weighted_stakes(const std::vector<double>& stakes,
                                          const std::vector<double>& speeds) {
    if (stakes.size() != speeds.size()) throw std::invalid_argument("stakes/speeds length mismatch");
    double total = 0;
    for (std::size_t i = 0; i < stakes.size(); ++i) {
        if (stakes[i] < 0 || speeds[i] < 0) throw std::invalid_argument("entries must be >= 0");
        total += stakes[i] * speeds[i];
    }
    if (total <= 0) throw std::invalid_argument("all stake*speed products are zero");
    std::vector<double> out(stakes.size());
    for (std::size_t i = 0; i < stakes.size(); ++i) out[i] = stakes[i] * speeds[i] / total;
    return out;
}

double bfs_tail_bound(const BackboneParams& p) {
    p.validate();
    return std::exp(-p.x);
}

double chernoff_growth_bound(const BackboneParams& p) {
    p.validate();
    return std::min(1.0, 2.0 * std::exp(-p.lambda_h * p.T * p.delta * p.delta / 3.0));
}

GapBound gap_bound(const BackboneParams& p) {
    p.validate();
    GapBound out;
    out.nu = (p.lambda_h - kE * p.lambda_a) / 3.0;
    if (out.nu <= 0) {
        out.vacuous = true;
        out.zeta = 0;
        out.prob_lower_bound = 0;
        return out;
    }
    out.zeta = std::min(out.nu * out.nu / (3.0 * p.lambda_h), out.nu);
    double inner = 1.0 - 2.0 * std::exp(-out.zeta * p.T);
    out.prob_lower_bound = inner <= 0 ? 0.0 : clamp01(inner * inner);
    return out;
}

std::optional<double> attacker_reward_bound(const BackboneParams& p, double block_reward) {
    GapBound gb = gap_bound(p);
    if (gb.vacuous) return std::nullopt;
    double floor_lt = std::floor(p.lambda_h * p.T);
    double ezt = std::exp(-gb.zeta * p.T);
    double part1 = 2.0 * (ezt - ezt * ezt) * (1.0 + floor_lt) * floor_lt * block_reward;
    // geometric series closed form of sum_z e^-z (z + lambda_h T + 1)
    double geom = (p.lambda_h * p.T + 1.0) / (1.0 - std::exp(-1.0)) +
                  std::exp(-1.0) / ((1.0 - std::exp(-1.0)) * (1.0 - std::exp(-1.0)));
    double part2 = std::exp(-(p.lambda_h - kE * p.lambda_a) * p.T + 1.0) * geom * block_reward;
    return part1 + part2;
}

void LongRangeParams::validate() const {
    if (alpha_h <= 0 || alpha_h > 1) throw std::invalid_argument("alpha_h must be in (0,1]");
    if (p_s < 0 || p_s > 1) throw std::invalid_argument("p_s must be in [0,1]");
    if (l_a > l_c) throw std::invalid_argument("l_a must be <= l_c");
    if (lambda_h < 0) throw std::invalid_argument("lambda_h must be >= 0");
}

double adversary_stake_bound(const LongRangeParams& p) {
    p.validate();
    return clamp01(p.p_s * p.depth() * p.alpha_h + (1.0 - p.alpha_h));
}

std::optional<double> long_range_alpha_threshold(double p_s, double depth) {
    double denom = 1.0 + 1.0 / kE - p_s * depth;
    if (denom <= 0) return std::nullopt;  // attack viable regardless of alpha_h
    return 1.0 / denom;
}

double long_range_depth_threshold(double alpha_h, double p_s) {
    if (p_s <= 0) throw std::invalid_argument("p_s must be > 0");
    return (1.0 + 1.0 / kE - 1.0 / alpha_h) / p_s;
}

std::optional<double> long_range_min_time(const LongRangeParams& p) {
    p.validate();
    double depth = p.depth();
    double denom = p.lambda_h * (kE * p.p_s * depth + kE / p.alpha_h - kE - 1.0);
    if (denom <= 0) return std::nullopt;  // attack infeasible at this depth
    return depth / denom;
}

double long_range_min_time_asymptote(const LongRangeParams& p) {
    p.validate();
    if (p.lambda_h <= 0 || p.p_s <= 0) throw std::invalid_argument("lambda_h and p_s must be > 0");
    return 1.0 / (p.lambda_h * kE * p.p_s);
}

nlohmann::json bound_table(const nlohmann::json& config) {
    nlohmann::ordered_json out;

    if (config.contains("backbone")) {
        const auto& b = config.at("backbone");
        BackboneParams p;
        p.lambda_h = b.at("lambda_h").get<double>();
        p.lambda_a = b.value("lambda_a", 0.0);
        p.T = b.value("T", 0.0);
        p.delta = b.value("delta", 0.2);
        p.x = b.value("x", 0.0);
        nlohmann::ordered_json row;
        row["bfs_tail_bound"] = bfs_tail_bound(p);
        row["chernoff_growth_bound"] = chernoff_growth_bound(p);
        GapBound gb = gap_bound(p);
        row["gap_nu"] = gb.nu;
        row["gap_zeta"] = gb.zeta;
        row["gap_prob_lower_bound"] = gb.prob_lower_bound;
        row["gap_vacuous"] = gb.vacuous;
        auto reward = attacker_reward_bound(p, b.value("block_reward", 1.0));
        if (reward) {
            row["attacker_reward_bound"] = *reward;
        } else {
            row["attacker_reward_bound"] = "vacuous";
        }
        out["backbone"] = row;
    }

    if (config.contains("long_range")) {
        const auto& l = config.at("long_range");
        LongRangeParams p;
        p.alpha_h = l.at("alpha_h").get<double>();
        p.p_s = l.at("p_s").get<double>();
        p.lambda_h = l.at("lambda_h").get<double>();
        p.l_c = l.value("l_c", 0.0);
        p.l_a = l.value("l_a", 0.0);
        nlohmann::ordered_json row;
        row["adversary_stake_bound"] = adversary_stake_bound(p);
        row["depth_threshold"] = long_range_depth_threshold(p.alpha_h, p.p_s);
        row["depth_threshold_days"] = long_range_depth_threshold(p.alpha_h, p.p_s) / p.lambda_h;
        auto alpha_thr = long_range_alpha_threshold(p.p_s, p.depth());
        if (alpha_thr) {
            row["alpha_threshold_at_depth"] = *alpha_thr;
        } else {
            row["alpha_threshold_at_depth"] = "attack_always_viable";
        }
        auto t_min = long_range_min_time(p);
        if (t_min) {
            row["min_attack_time"] = *t_min;
        } else {
            row["min_attack_time"] = "attack_infeasible";
        }
        row["min_attack_time_asymptote"] = long_range_min_time_asymptote(p);
        out["long_range"] = row;
    }

    return out;
}

}  // namespace vdpchain::bounds
