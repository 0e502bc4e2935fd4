#include "latwalk/sim/estimate.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace latwalk::sim {

namespace {

// Chunked work queue. Counts add commutatively, so the aggregate cannot
// depend on which thread ran which chunk.
constexpr std::uint64_t kChunk = 4096;

template <class Plan, class RangeFn>
RangeCounts run_trials(const Plan& plan, RangeFn range_fn,
                       std::uint64_t trials, std::uint64_t master_seed,
                       int threads) {
    if (threads <= 1 || trials < 2 * kChunk) {
        return range_fn(plan, master_seed, 0, trials, nullptr, nullptr);
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<RangeCounts> partial(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            RangeCounts local;
            for (;;) {
                const std::uint64_t first = next.fetch_add(kChunk);
                if (first >= trials) break;
                const std::uint64_t count = std::min(kChunk, trials - first);
                local += range_fn(plan, master_seed, first, count, nullptr, nullptr);
            }
            partial[static_cast<std::size_t>(t)] = local;
        });
    }
    for (auto& th : pool) th.join();
    RangeCounts total;
    for (const auto& c : partial) total += c;
    return total;
}

double wilson_low(std::uint64_t k, std::uint64_t n, double z) {
    const double nn = static_cast<double>(n);
    const double phat = static_cast<double>(k) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = phat + z2 / (2.0 * nn);
    const double half = z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn));
    const double v = (center - half) / denom;
    return v < 0.0 ? 0.0 : v;
}

double wilson_high(std::uint64_t k, std::uint64_t n, double z) {
    const double nn = static_cast<double>(n);
    const double phat = static_cast<double>(k) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = phat + z2 / (2.0 * nn);
    const double half = z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn));
    const double v = (center + half) / denom;
    return v > 1.0 ? 1.0 : v;
}

SimEstimate aggregate(const RangeCounts& counts, std::uint64_t trials,
                      std::uint64_t master_seed, const EstimateOptions& opt,
                      std::string_view kernel_name) {
    SimEstimate est;
    est.trials = trials;
    est.successes = counts.successes;
    est.certified_failures = counts.certified;
    est.unresolved = counts.unresolved;
    est.total_steps = counts.total_steps;
    est.master_seed = master_seed;
    est.kernel = std::string(kernel_name);

    const double n = static_cast<double>(trials);
    const double cert_mass =
        static_cast<double>(counts.certified) * opt.stop.epsilon_stop / n;
    est.p_low = static_cast<double>(counts.successes) / n;
    est.p_high = static_cast<double>(counts.successes + counts.unresolved) / n +
                 cert_mass;
    if (est.p_high > 1.0) est.p_high = 1.0;
    est.ci_low = wilson_low(counts.successes, trials, opt.ci_z);
    est.ci_high =
        wilson_high(counts.successes + counts.unresolved, trials, opt.ci_z) +
        cert_mass;
    if (est.ci_high > 1.0) est.ci_high = 1.0;
    return est;
}

void validate_run(std::uint64_t trials, const EstimateOptions& opt) {
    if (trials == 0) throw ConfigError("estimate: trials must be >= 1");
    if (opt.threads < 1) throw ConfigError("estimate: threads must be >= 1");
}

}  // namespace

SimEstimate estimate_crossing(const prob::BiasSpec& beta,
                              const prob::LineSpec& line, std::uint64_t trials,
                              std::uint64_t master_seed,
                              const EstimateOptions& opt) {
    validate_run(trials, opt);
    const CrossingPlan plan = make_crossing_plan(beta, line, opt.stop);
    const Kernel& kernel = select_kernel(opt.kernel);
    const RangeCounts counts =
        run_trials(plan, kernel.crossing, trials, master_seed, opt.threads);
    return aggregate(counts, trials, master_seed, opt, kernel.name);
}

SimEstimate estimate_hitting(const prob::BiasSpec& beta, int p, int d,
                             std::uint64_t trials, std::uint64_t master_seed,
                             const EstimateOptions& opt) {
    validate_run(trials, opt);
    const HittingPlan plan = make_hitting_plan(beta, p, d, opt.stop);
    const Kernel& kernel = select_kernel(opt.kernel);
    const RangeCounts counts =
        run_trials(plan, kernel.hitting, trials, master_seed, opt.threads);
    return aggregate(counts, trials, master_seed, opt, kernel.name);
}

std::vector<SimEstimate> sweep_alpha(const prob::BiasSpec& beta,
                                     const std::vector<comb::Rat>& alphas,
                                     const comb::Rat& d, std::uint64_t trials,
                                     std::uint64_t master_seed,
                                     const EstimateOptions& opt) {
    if (alphas.empty()) throw ConfigError("sweep_alpha: need at least one alpha");
    std::vector<SimEstimate> out;
    out.reserve(alphas.size());
    for (const auto& alpha : alphas) {
        out.push_back(estimate_crossing(beta, prob::LineSpec{alpha, d}, trials,
                                        master_seed, opt));
    }
    return out;
}

}  // namespace latwalk::sim
