// AVX2 trial kernel: four trials per vector, one 64-bit lane each. The lane
// arithmetic reproduces the scalar reference exactly — same stream
// derivation, same step updates, same stop-condition order — so outcomes are
// bit-identical per trial. Finished lanes are frozen by mask until the group
// drains; the range tail falls back to the scalar kernel.

#include "latwalk/sim/kernels.hpp"

#if defined(LATWALK_HAVE_AVX2_KERNEL)

#include <immintrin.h>

namespace latwalk::sim {

namespace {

constexpr std::uint64_t kMixA = 0xBF58476D1CE4E5B9ull;
constexpr std::uint64_t kMixB = 0x94D049BB133111EBull;

inline __m256i set1_u64(std::uint64_t v) {
    return _mm256_set1_epi64x(static_cast<long long>(v));
}

// Low 64 bits of a 64x64 product, from 32x32 partials.
inline __m256i mul64lo(__m256i a, __m256i b) {
    const __m256i a_hi = _mm256_srli_epi64(a, 32);
    const __m256i b_hi = _mm256_srli_epi64(b, 32);
    const __m256i lo = _mm256_mul_epu32(a, b);
    const __m256i cross =
        _mm256_add_epi64(_mm256_mul_epu32(a, b_hi), _mm256_mul_epu32(a_hi, b));
    return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

inline __m256i mix64x4(__m256i z) {
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 30));
    z = mul64lo(z, set1_u64(kMixA));
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 27));
    z = mul64lo(z, set1_u64(kMixB));
    return _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
}

// Unsigned a < b via sign-flipped signed compare.
inline __m256i cmplt_epu64(__m256i a, __m256i b) {
    const __m256i flip = set1_u64(0x8000000000000000ull);
    return _mm256_cmpgt_epi64(_mm256_xor_si256(b, flip),
                              _mm256_xor_si256(a, flip));
}

inline __m256i cmpge_epi64(__m256i a, __m256i b) {
    // a >= b  <=>  !(b > a)
    return _mm256_xor_si256(_mm256_cmpgt_epi64(b, a),
                            _mm256_set1_epi64x(-1));
}

struct LaneResults {
    alignas(32) std::uint64_t steps[4];
    alignas(32) std::uint64_t status[4];
};

// Shared four-lane driver. StepCheck classifies the post-step state of the
// active lanes into (success, certified, unresolved) masks, in the same
// priority order as the scalar kernels.
template <class Plan, class StepCheck>
void run_group4(const Plan& plan, std::uint64_t master_seed,
                std::uint64_t first, StepCheck&& check, LaneResults& out) {
    const __m256i gamma = set1_u64(kStreamGamma);
    const __m256i thresh = set1_u64(plan.up_threshold);
    const __m256i one = set1_u64(1);

    __m256i trial = _mm256_add_epi64(
        set1_u64(first), _mm256_set_epi64x(3, 2, 1, 0));
    __m256i state = mix64x4(_mm256_add_epi64(
        set1_u64(master_seed), mul64lo(_mm256_add_epi64(trial, one), gamma)));

    __m256i a = _mm256_setzero_si256();
    __m256i b = _mm256_setzero_si256();
    __m256i steps = _mm256_setzero_si256();
    __m256i steps_at_stop = _mm256_setzero_si256();
    __m256i status = set1_u64(static_cast<std::uint64_t>(TrialStatus::unresolved));
    __m256i active = _mm256_set1_epi64x(-1);
    const __m256i max_steps_m1 = set1_u64(plan.stop.max_steps - 1);

    while (_mm256_movemask_epi8(active) != 0) {
        state = _mm256_add_epi64(state, gamma);
        const __m256i u = mix64x4(state);
        const __m256i up = cmplt_epu64(u, thresh);

        const __m256i active_one = _mm256_and_si256(active, one);
        b = _mm256_add_epi64(b, _mm256_and_si256(active_one, up));
        a = _mm256_add_epi64(a, _mm256_andnot_si256(up, active_one));
        steps = _mm256_add_epi64(steps, active_one);

        __m256i success, certified, unresolved;
        check(a, b, success, certified, unresolved);
        const __m256i budget = _mm256_cmpgt_epi64(steps, max_steps_m1);

        success = _mm256_and_si256(success, active);
        certified = _mm256_andnot_si256(success, _mm256_and_si256(certified, active));
        unresolved = _mm256_andnot_si256(
            success, _mm256_andnot_si256(certified,
                     _mm256_and_si256(_mm256_or_si256(unresolved, budget), active)));

        status = _mm256_blendv_epi8(
            status, set1_u64(static_cast<std::uint64_t>(TrialStatus::success)),
            success);
        status = _mm256_blendv_epi8(
            status,
            set1_u64(static_cast<std::uint64_t>(TrialStatus::failure_certified)),
            certified);
        status = _mm256_blendv_epi8(
            status, set1_u64(static_cast<std::uint64_t>(TrialStatus::unresolved)),
            unresolved);

        const __m256i done =
            _mm256_or_si256(success, _mm256_or_si256(certified, unresolved));
        steps_at_stop = _mm256_blendv_epi8(steps_at_stop, steps, done);
        active = _mm256_andnot_si256(done, active);
    }

    _mm256_store_si256(reinterpret_cast<__m256i*>(out.steps), steps_at_stop);
    _mm256_store_si256(reinterpret_cast<__m256i*>(out.status), status);
}

template <class Plan, class StepCheck>
RangeCounts avx2_range(const Plan& plan, std::uint64_t master_seed,
                       std::uint64_t first, std::uint64_t count,
                       std::uint8_t* status_out, std::uint64_t* steps_out,
                       bool pre_certified, std::uint64_t pre_cert_status,
                       StepCheck&& check,
                       RangeCounts (*scalar_tail)(const Plan&, std::uint64_t,
                                                  std::uint64_t, std::uint64_t,
                                                  std::uint8_t*, std::uint64_t*)) {
    RangeCounts counts;
    if (pre_certified) {
        // Gap certified before the first step; plan-level, so every trial
        // stops immediately. Mirror the scalar pre-check.
        counts.certified = count;
        for (std::uint64_t i = 0; i < count; ++i) {
            if (status_out) status_out[i] = static_cast<std::uint8_t>(pre_cert_status);
            if (steps_out) steps_out[i] = 0;
        }
        return counts;
    }

    std::uint64_t i = 0;
    for (; i + 4 <= count; i += 4) {
        LaneResults lanes;
        run_group4(plan, master_seed, first + i, check, lanes);
        for (int lane = 0; lane < 4; ++lane) {
            switch (static_cast<TrialStatus>(lanes.status[lane])) {
                case TrialStatus::success: ++counts.successes; break;
                case TrialStatus::failure_certified: ++counts.certified; break;
                case TrialStatus::unresolved: ++counts.unresolved; break;
            }
            counts.total_steps += lanes.steps[lane];
            if (status_out) status_out[i + lane] =
                static_cast<std::uint8_t>(lanes.status[lane]);
            if (steps_out) steps_out[i + lane] = lanes.steps[lane];
        }
    }
    if (i < count) {
        counts += scalar_tail(plan, master_seed, first + i, count - i,
                              status_out ? status_out + i : nullptr,
                              steps_out ? steps_out + i : nullptr);
    }
    return counts;
}

RangeCounts crossing_range_avx2(const CrossingPlan& plan,
                                std::uint64_t master_seed, std::uint64_t first,
                                std::uint64_t count, std::uint8_t* status_out,
                                std::uint64_t* steps_out) {
    const __m256i scale = set1_u64(static_cast<std::uint64_t>(plan.line_scale));
    const __m256i slope = set1_u64(static_cast<std::uint64_t>(plan.slope_num));
    const __m256i offset = set1_u64(static_cast<std::uint64_t>(plan.offset));
    const __m256i cert_slope =
        set1_u64(static_cast<std::uint64_t>(plan.cert_slope));
    const __m256i cert_rhs = set1_u64(
        static_cast<std::uint64_t>(plan.g_stop - plan.floor_d - 1));
    const bool cert = plan.cert_enabled;

    const bool pre_certified = cert && plan.floor_d + 1 >= plan.g_stop;
    const auto check = [&](const __m256i& a, const __m256i& b, __m256i& success,
                           __m256i& certified, __m256i& unresolved) {
        const __m256i lhs = mul64lo(b, scale);
        const __m256i rhs = _mm256_add_epi64(mul64lo(a, slope), offset);
        success = _mm256_cmpgt_epi64(lhs, rhs);
        if (cert) {
            // gap >= g_stop  <=>  cert_slope*a - b >= g_stop - floor_d - 1
            const __m256i lead = _mm256_sub_epi64(mul64lo(a, cert_slope), b);
            certified = cmpge_epi64(lead, cert_rhs);
        } else {
            certified = _mm256_setzero_si256();
        }
        unresolved = _mm256_setzero_si256();
    };
    return avx2_range(plan, master_seed, first, count, status_out, steps_out,
                      pre_certified,
                      static_cast<std::uint64_t>(TrialStatus::failure_certified),
                      check, kScalarKernel.crossing);
}

RangeCounts hitting_range_avx2(const HittingPlan& plan,
                               std::uint64_t master_seed, std::uint64_t first,
                               std::uint64_t count, std::uint8_t* status_out,
                               std::uint64_t* steps_out) {
    const __m256i pvec = set1_u64(static_cast<std::uint64_t>(plan.p));
    const __m256i dvec = set1_u64(static_cast<std::uint64_t>(plan.d));
    const __m256i g_stop = set1_u64(static_cast<std::uint64_t>(plan.g_stop));
    const __m256i excess_cap =
        set1_u64(static_cast<std::uint64_t>(plan.stop.max_excess));
    const bool cert = plan.cert_enabled;

    const bool pre_certified = cert && plan.d >= plan.g_stop;
    const auto check = [&](const __m256i& a, const __m256i& b, __m256i& success,
                           __m256i& certified, __m256i& unresolved) {
        const __m256i line = _mm256_add_epi64(mul64lo(a, pvec), dvec);
        success = _mm256_cmpeq_epi64(b, line);
        if (cert) {
            certified = cmpge_epi64(_mm256_sub_epi64(line, b), g_stop);
        } else {
            certified = _mm256_setzero_si256();
        }
        unresolved = _mm256_cmpgt_epi64(_mm256_sub_epi64(b, line), excess_cap);
    };
    return avx2_range(plan, master_seed, first, count, status_out, steps_out,
                      pre_certified,
                      static_cast<std::uint64_t>(TrialStatus::failure_certified),
                      check, kScalarKernel.hitting);
}

}  // namespace

const Kernel kAvx2Kernel{"avx2", &crossing_range_avx2, &hitting_range_avx2};

}  // namespace latwalk::sim

#endif  // LATWALK_HAVE_AVX2_KERNEL
