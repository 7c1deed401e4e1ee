#pragma once

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <vector>

namespace vdpchain::econ {

struct Fork {
    double win_prob = 0;          // p_i
    std::int64_t published = 0;   // x_i, blocks already on the fork
    std::int64_t prospective = 0; // y_i, blocks the validator could still mine
};

struct ForkScenario {
    std::vector<Fork> forks;
    double block_reward = 1.0;
    double epsilon = 0.0;

    void validate() const;  // throws if probabilities do not sum to 1 or counts negative
};

// expected reward of publishing on every fork; with self_submission the
// epsilon slash surcharge cancels against the submitter rebate
double reward_all_forks(const ForkScenario& s, bool self_submission = true);
double reward_single_fork(const ForkScenario& s, std::size_t fork_index,
                          bool self_submission = true);

struct StrategyChoice {
    bool all_forks = false;
    std::size_t fork_index = 0;  // meaningful when !all_forks
    double value = 0;
};

// maximizer over {all-forks, single-fork_i}; ties prefer the smallest single fork
StrategyChoice best_strategy(const ForkScenario& s);

ForkScenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const ForkScenario& s);
nlohmann::json strategy_table(const ForkScenario& s);

}  // namespace vdpchain::econ
