#include "vdpchain/econ.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace vdpchain::econ {

void ForkScenario::validate() const {
    if (forks.empty()) throw std::invalid_argument("scenario needs at least one fork");
    double sum = 0;
    for (const Fork& f : forks) {
        if (f.win_prob < 0 || f.win_prob > 1) throw std::invalid_argument("win_prob outside [0,1]");
        if (f.published < 0 || f.prospective < 0) throw std::invalid_argument("block counts must be >= 0");
        sum += f.win_prob;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("win probabilities must sum to 1");
    if (epsilon < 0 || epsilon >= 1) throw std::invalid_argument("epsilon must be in [0,1)");
    if (block_reward < 0) throw std::invalid_argument("block_reward must be >= 0");
}

namespace {

struct Totals {
    double x_total = 0;
    double y_total = 0;
};

Totals totals_of(const ForkScenario& s) {
    Totals t;
    for (const Fork& f : s.forks) {
        t.x_total += static_cast<double>(f.published);
        t.y_total += static_cast<double>(f.prospective);
    }
    return t;
}

}  // namespace

double reward_all_forks(const ForkScenario& s, bool self_submission) {
    s.validate();
    auto [x_total, y_total] = totals_of(s);
    if (self_submission) {
        // E0 = (2 sum p_i (x_i + y_i) - (X + Y)) R
        double acc = 0;
        for (const Fork& f : s.forks) {
            acc += f.win_prob * static_cast<double>(f.published + f.prospective);
        }
        return (2.0 * acc - (x_total + y_total)) * s.block_reward;
    }
    // raw form: each off-fork block costs (1+eps) with no rebate
    double acc = 0;
    for (const Fork& f : s.forks) {
        double own = static_cast<double>(f.published + f.prospective);
        double others = (x_total + y_total) - own;
        acc += f.win_prob * (own - (1.0 + s.epsilon) * others);
    }
    return acc * s.block_reward;
}

double reward_single_fork(const ForkScenario& s, std::size_t fork_index, bool self_submission) {
    s.validate();
    if (fork_index >= s.forks.size()) throw std::out_of_range("fork index out of range");
    auto [x_total, y_total] = totals_of(s);
    (void)y_total;
    const double y_i = static_cast<double>(s.forks[fork_index].prospective);
    if (self_submission) {
        // E_i = (2 sum_j p_j (x_j + y_j) - (X + 2 sum_{j != i} p_j y_j + y_i)) R
        double acc = 0;
        double cross = 0;
        for (std::size_t j = 0; j < s.forks.size(); ++j) {
            const Fork& f = s.forks[j];
            acc += f.win_prob * static_cast<double>(f.published + f.prospective);
            if (j != fork_index) cross += f.win_prob * static_cast<double>(f.prospective);
        }
        return (2.0 * acc - (x_total + 2.0 * cross + y_i)) * s.block_reward;
    }
    double acc = 0;
    for (std::size_t j = 0; j < s.forks.size(); ++j) {
        const Fork& f = s.forks[j];
        double x_j = static_cast<double>(f.published);
        if (j == fork_index) {
            acc += f.win_prob * (x_j + y_i - (1.0 + s.epsilon) * (x_total - x_j));
        } else {
            acc += f.win_prob * (x_j - (1.0 + s.epsilon) * (x_total - x_j + y_i));
        }
    }
    return acc * s.block_reward;
}

StrategyChoice best_strategy(const ForkScenario& s) {
    s.validate();
    StrategyChoice best;
    best.all_forks = false;
    best.fork_index = 0;
    best.value = reward_single_fork(s, 0);
    for (std::size_t i = 1; i < s.forks.size(); ++i) {
        double v = reward_single_fork(s, i);
        if (v > best.value) {
            best.value = v;
            best.fork_index = i;
        }
    }
    double all = reward_all_forks(s);
    if (all > best.value) {
        best.all_forks = true;
        best.value = all;
    }
    return best;
}

ForkScenario scenario_from_json(const nlohmann::json& j) {
    ForkScenario s;
    for (const auto& f : j.at("forks")) {
        Fork fork;
        fork.win_prob = f.at("win_prob").get<double>();
        fork.published = f.value("published", std::int64_t{0});
        fork.prospective = f.value("prospective", std::int64_t{0});
        s.forks.push_back(fork);
    }
    s.block_reward = j.value("block_reward", 1.0);
    s.epsilon = j.value("epsilon", 0.0);
    s.validate();
    return s;
}

nlohmann::json scenario_to_json(const ForkScenario& s) {
    nlohmann::json forks = nlohmann::json::array();
    for (const Fork& f : s.forks) {
        forks.push_back({{"win_prob", f.win_prob},
                         {"published", f.published},
                         {"prospective", f.prospective}});
    }
    return {{"forks", forks}, {"block_reward", s.block_reward}, {"epsilon", s.epsilon}};
}

nlohmann::json strategy_table(const ForkScenario& s) {
    nlohmann::json rows = nlohmann::json::array();
    rows.push_back({{"strategy", "all_forks"}, {"expected_reward", reward_all_forks(s)}});
    for (std::size_t i = 0; i < s.forks.size(); ++i) {
        rows.push_back({{"strategy", "single_fork"},
                        {"fork", i + 1},
                        {"expected_reward", reward_single_fork(s, i)}});
    }
    StrategyChoice best = best_strategy(s);
    nlohmann::json rec;
    if (best.all_forks) {
        rec = {{"strategy", "all_forks"}, {"expected_reward", best.value}};
    } else {
        rec = {{"strategy", "single_fork"}, {"fork", best.fork_index + 1}, {"expected_reward", best.value}};
    }
    return {{"rows", rows}, {"recommendation", rec}};
}

}  // namespace vdpchain::econ
