#pragma once

#include <cstdint>

#include "latwalk/sim/rng.hpp"

// Trial plans and the scalar reference kernels. A plan folds the bias, the
// target line, the stop rule and the certification bound into plain
// integers, so the per-step work is draw / compare / add — the same inner
// loop the SIMD kernels vectorize.

namespace latwalk::sim {

struct StopRule {
    double epsilon_stop = 1e-9;          // certified-failure threshold
    std::uint64_t max_steps = 1'000'000; // per-trial step budget
    std::int64_t max_excess = 64;        // above-line excess cap (hitting)
};

enum class TrialStatus : std::uint8_t {
    success = 0,
    failure_certified = 1,  // remaining success probability <= epsilon_stop
    unresolved = 2,         // budget exhausted without a certified bound
};

struct TrialOutcome {
    TrialStatus status = TrialStatus::unresolved;
    std::uint64_t steps_used = 0;
    // Certified bound on the remaining success probability at stop time:
    // <= epsilon_stop for failure_certified, 0 after success, 1 otherwise.
    double bound_at_stop = 1.0;
};

// Crossing trial: success as soon as b > alpha*a + d, tested exactly as
// b*line_scale > slope_num*a + offset with the rationals brought to a
// common denominator. If the slope's integer floor p has phi0 < 1, a state
// below the line y = p*x + floor(d) certifies failure once
// phi0^(p*a + floor(d) + 1 - b) drops under epsilon_stop; the threshold is
// precompiled into gap >= g_stop.
struct CrossingPlan {
    std::uint64_t up_threshold = 0;
    std::int64_t line_scale = 1;   // common denominator of alpha and d
    std::int64_t slope_num = 0;    // alpha * line_scale
    std::int64_t offset = 0;       // d * line_scale
    bool cert_enabled = false;
    std::int64_t cert_slope = 0;   // floor(alpha)
    std::int64_t floor_d = 0;
    std::int64_t g_stop = 0;       // smallest gap with phi0^gap <= epsilon
    double phi0 = 1.0;
    StopRule stop;
};

// Hitting trial: success when b == p*a + d after at least one step. States
// strictly below the line certify failure through the crossing bound
// phi0^(p*a + d - b) (a hit from below requires crossing y = p*x + d - 1).
// States above the line carry no certified bound; excess beyond max_excess
// ends the trial unresolved.
struct HittingPlan {
    std::uint64_t up_threshold = 0;
    std::int64_t p = 1;
    std::int64_t d = 0;
    bool cert_enabled = false;
    std::int64_t g_stop = 0;
    double phi0 = 1.0;
    StopRule stop;
};

CrossingPlan make_crossing_plan(const prob::BiasSpec& beta,
                                const prob::LineSpec& line,
                                const StopRule& stop,
                                const roots::RootConfig& cfg = {});

HittingPlan make_hitting_plan(const prob::BiasSpec& beta, int p, int d,
                              const StopRule& stop,
                              const roots::RootConfig& cfg = {});

// Scalar reference trials. Outcome is a pure function of the plan and the
// stream position; kernels of every instruction set must reproduce it
// bit for bit.
TrialOutcome run_crossing_trial(const CrossingPlan& plan, TrialStream& rng);
TrialOutcome run_hitting_trial(const HittingPlan& plan, TrialStream& rng);

}  // namespace latwalk::sim
