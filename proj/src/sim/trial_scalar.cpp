#include "latwalk/sim/kernels.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>

namespace latwalk::sim {

namespace {

using comb::BigCount;

void validate_stop(const StopRule& stop) {
    if (stop.max_steps < 1) throw ConfigError("stop rule: max_steps must be >= 1");
    if (!(stop.epsilon_stop > 0.0) || stop.epsilon_stop >= 1.0)
        throw ConfigError("stop rule: epsilon_stop must be in (0, 1)");
    if (stop.max_excess < 0) throw ConfigError("stop rule: max_excess must be >= 0");
}

std::int64_t to_i64_checked(const BigCount& v, const char* what) {
    // Line coefficients and per-step products must stay well inside int64,
    // the SIMD lanes compare 64-bit signed values.
    static const BigCount kLimit = BigCount(1) << 62;
    if (v < 0 || v >= kLimit) throw ConfigError(std::string(what) + " too large");
    return v.convert_to<std::int64_t>();
}

// Smallest g >= 1 with phi0^g <= epsilon. The ceil from logs is adjusted
// upward until the inequality holds in double arithmetic, so a certified
// trial's reported bound really is <= epsilon.
std::int64_t certified_gap(double phi0, double epsilon) {
    constexpr std::int64_t kCap = std::int64_t(1) << 60;
    const double est = std::log(epsilon) / std::log(phi0);
    if (!(est < static_cast<double>(kCap))) return kCap;
    std::int64_t g = std::max<std::int64_t>(1, static_cast<std::int64_t>(est) - 1);
    while (roots::powi(phi0, static_cast<std::uint64_t>(g)) > epsilon) {
        if (++g >= kCap) return kCap;
    }
    return g;
}

}  // namespace

CrossingPlan make_crossing_plan(const prob::BiasSpec& beta,
                                const prob::LineSpec& line,
                                const StopRule& stop,
                                const roots::RootConfig& cfg) {
    validate_stop(stop);
    if (line.alpha < 0) throw ConfigError("crossing: alpha must be >= 0");
    if (line.d < 0) throw ConfigError("crossing: d must be >= 0");
    if (!(beta.value > 0.0)) throw ConfigError("crossing: beta must be > 0");

    const BigCount an = boost::multiprecision::numerator(line.alpha);
    const BigCount ad = boost::multiprecision::denominator(line.alpha);
    const BigCount dn = boost::multiprecision::numerator(line.d);
    const BigCount dd = boost::multiprecision::denominator(line.d);
    const BigCount scale = boost::multiprecision::lcm(ad, dd);

    CrossingPlan plan;
    plan.up_threshold = up_threshold(beta);
    plan.line_scale = to_i64_checked(scale, "crossing: line denominator");
    plan.slope_num = to_i64_checked(an * (scale / ad), "crossing: slope");
    plan.offset = to_i64_checked(dn * (scale / dd), "crossing: intercept");
    plan.stop = stop;

    const BigCount steps(stop.max_steps);
    to_i64_checked(BigCount(plan.line_scale) * steps, "crossing: b*scale range");
    to_i64_checked(BigCount(plan.slope_num) * steps + plan.offset,
                   "crossing: slope*a range");

    plan.cert_slope = to_i64_checked(an / ad, "crossing: floor(alpha)");
    plan.floor_d = to_i64_checked(dn / dd, "crossing: floor(d)");
    if (plan.cert_slope >= 1) {
        const roots::RootResult r =
            roots::solve_phi0(beta.value, static_cast<int>(plan.cert_slope), cfg);
        if (r.value < 1.0) {
            plan.cert_enabled = true;
            plan.phi0 = r.value;
            plan.g_stop = certified_gap(r.value, stop.epsilon_stop);
            to_i64_checked(BigCount(plan.cert_slope) * steps + plan.floor_d + 1,
                           "crossing: certification gap range");
        }
    }
    return plan;
}

HittingPlan make_hitting_plan(const prob::BiasSpec& beta, int p, int d,
                              const StopRule& stop,
                              const roots::RootConfig& cfg) {
    validate_stop(stop);
    if (p < 1) throw ConfigError("hitting: p must be a positive integer");
    if (d < 0) throw ConfigError("hitting: d must be >= 0");
    if (!(beta.value > 0.0)) throw ConfigError("hitting: beta must be > 0");

    HittingPlan plan;
    plan.up_threshold = up_threshold(beta);
    plan.p = p;
    plan.d = d;
    plan.stop = stop;
    to_i64_checked(BigCount(p) * stop.max_steps + d + stop.max_excess + 1,
                   "hitting: line range");

    const roots::RootResult r = roots::solve_phi0(beta.value, p, cfg);
    if (r.value < 1.0) {
        plan.cert_enabled = true;
        plan.phi0 = r.value;
        plan.g_stop = certified_gap(r.value, stop.epsilon_stop);
    }
    return plan;
}

std::uint64_t up_threshold(const prob::BiasSpec& beta) {
    if (beta.exact) {
        const BigCount bn = boost::multiprecision::numerator(*beta.exact);
        const BigCount bd = boost::multiprecision::denominator(*beta.exact);
        if (bn <= 0) throw ConfigError("up_threshold: beta must be > 0");
        const BigCount t = (bn << 64) / (bn + bd);
        return t.convert_to<std::uint64_t>();
    }
    if (!(beta.value > 0.0)) throw ConfigError("up_threshold: beta must be > 0");
    const long double pup =
        static_cast<long double>(beta.value) / (static_cast<long double>(beta.value) + 1.0L);
    const long double scaled = std::ldexp(pup, 64);
    if (scaled >= std::ldexp(1.0L, 64)) return ~std::uint64_t(0);
    return static_cast<std::uint64_t>(scaled);
}

TrialOutcome run_crossing_trial(const CrossingPlan& plan, TrialStream& rng) {
    const std::int64_t g0 = plan.floor_d + 1;
    if (plan.cert_enabled && g0 >= plan.g_stop)
        return {TrialStatus::failure_certified, 0,
                roots::powi(plan.phi0, static_cast<std::uint64_t>(g0))};

    std::int64_t a = 0, b = 0;
    std::uint64_t steps = 0;
    for (;;) {
        if (next_u64(rng) < plan.up_threshold) ++b; else ++a;
        ++steps;
        if (b * plan.line_scale > plan.slope_num * a + plan.offset)
            return {TrialStatus::success, steps, 0.0};
        if (plan.cert_enabled) {
            const std::int64_t gap = plan.cert_slope * a + plan.floor_d + 1 - b;
            if (gap >= plan.g_stop)
                return {TrialStatus::failure_certified, steps,
                        roots::powi(plan.phi0, static_cast<std::uint64_t>(gap))};
        }
        if (steps >= plan.stop.max_steps)
            return {TrialStatus::unresolved, steps, 1.0};
    }
}

TrialOutcome run_hitting_trial(const HittingPlan& plan, TrialStream& rng) {
    if (plan.cert_enabled && plan.d >= plan.g_stop)
        return {TrialStatus::failure_certified, 0,
                roots::powi(plan.phi0, static_cast<std::uint64_t>(plan.d))};

    std::int64_t a = 0, b = 0;
    std::uint64_t steps = 0;
    for (;;) {
        if (next_u64(rng) < plan.up_threshold) ++b; else ++a;
        ++steps;
        const std::int64_t line = plan.p * a + plan.d;
        if (b == line) return {TrialStatus::success, steps, 0.0};
        if (plan.cert_enabled && line - b >= plan.g_stop)
            return {TrialStatus::failure_certified, steps,
                    roots::powi(plan.phi0, static_cast<std::uint64_t>(line - b))};
        if (b - line > plan.stop.max_excess)
            return {TrialStatus::unresolved, steps, 1.0};
        if (steps >= plan.stop.max_steps)
            return {TrialStatus::unresolved, steps, 1.0};
    }
}

namespace {

template <class Plan, TrialOutcome (*RunTrial)(const Plan&, TrialStream&)>
RangeCounts scalar_range(const Plan& plan, std::uint64_t master_seed,
                         std::uint64_t first, std::uint64_t count,
                         std::uint8_t* status_out, std::uint64_t* steps_out) {
    RangeCounts counts;
    for (std::uint64_t i = 0; i < count; ++i) {
        TrialStream rng = make_stream(master_seed, first + i);
        const TrialOutcome out = RunTrial(plan, rng);
        switch (out.status) {
            case TrialStatus::success: ++counts.successes; break;
            case TrialStatus::failure_certified: ++counts.certified; break;
            case TrialStatus::unresolved: ++counts.unresolved; break;
        }
        counts.total_steps += out.steps_used;
        if (status_out) status_out[i] = static_cast<std::uint8_t>(out.status);
        if (steps_out) steps_out[i] = out.steps_used;
    }
    return counts;
}

}  // namespace

const Kernel kScalarKernel{
    "scalar",
    &scalar_range<CrossingPlan, &run_crossing_trial>,
    &scalar_range<HittingPlan, &run_hitting_trial>,
};

}  // namespace latwalk::sim
