#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latwalk/sim/kernels.hpp"

namespace latwalk::sim {

// Aggregated Monte Carlo estimate with an honest envelope: successes are
// certain, certified failures contribute at most epsilon_stop each, and
// unresolved trials contribute their full mass to the upper edge. The true
// probability lies in [p_low, p_high] up to binomial sampling error.
struct SimEstimate {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t certified_failures = 0;
    std::uint64_t unresolved = 0;
    double p_low = 0.0;    // successes / trials
    double p_high = 0.0;   // (successes + unresolved)/trials + certified mass
    double ci_low = 0.0;   // Wilson bound below p_low
    double ci_high = 0.0;  // Wilson bound above p_high
    std::uint64_t master_seed = 0;
    std::uint64_t total_steps = 0;
    std::string kernel;
};

struct EstimateOptions {
    StopRule stop;
    int threads = 1;
    KernelKind kernel = KernelKind::auto_detect;
    double ci_z = 1.959963984540054;  // 95% Wilson interval
};

// Runs `trials` independent trials; trial t draws from the stream derived
// from (master_seed, t), so the result is bit-identical across reruns, batch
// splits, thread counts and kernels.
SimEstimate estimate_crossing(const prob::BiasSpec& beta,
                              const prob::LineSpec& line,
                              std::uint64_t trials, std::uint64_t master_seed,
                              const EstimateOptions& opt = {});

SimEstimate estimate_hitting(const prob::BiasSpec& beta, int p, int d,
                             std::uint64_t trials, std::uint64_t master_seed,
                             const EstimateOptions& opt = {});

// One crossing estimate per slope, all with the same master seed (common
// random numbers, so the empirical monotonicity in alpha is not drowned in
// independent noise). Output order matches input order.
std::vector<SimEstimate> sweep_alpha(const prob::BiasSpec& beta,
                                     const std::vector<comb::Rat>& alphas,
                                     const comb::Rat& d, std::uint64_t trials,
                                     std::uint64_t master_seed,
                                     const EstimateOptions& opt = {});

}  // namespace latwalk::sim
