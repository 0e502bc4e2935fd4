#pragma once

#include <cstdint>
#include <string_view>

#include "latwalk/sim/trial.hpp"

// Kernel registry. The scalar kernel is the reference; wider kernels are
// selected at runtime when the CPU supports them and must be trial-for-trial
// identical to the reference (enforced by the equivalence tests).

namespace latwalk::sim {

struct RangeCounts {
    std::uint64_t successes = 0;
    std::uint64_t certified = 0;
    std::uint64_t unresolved = 0;
    std::uint64_t total_steps = 0;

    RangeCounts& operator+=(const RangeCounts& o) {
        successes += o.successes;
        certified += o.certified;
        unresolved += o.unresolved;
        total_steps += o.total_steps;
        return *this;
    }
};

// Runs trials [first, first + count) of the given master seed. When
// status_out / steps_out are non-null they receive one entry per trial
// (used by the equivalence tests).
using CrossingRangeFn = RangeCounts (*)(const CrossingPlan& plan,
                                        std::uint64_t master_seed,
                                        std::uint64_t first,
                                        std::uint64_t count,
                                        std::uint8_t* status_out,
                                        std::uint64_t* steps_out);

using HittingRangeFn = RangeCounts (*)(const HittingPlan& plan,
                                       std::uint64_t master_seed,
                                       std::uint64_t first,
                                       std::uint64_t count,
                                       std::uint8_t* status_out,
                                       std::uint64_t* steps_out);

struct Kernel {
    std::string_view name;
    CrossingRangeFn crossing = nullptr;
    HittingRangeFn hitting = nullptr;
};

enum class KernelKind { auto_detect, scalar, avx2 };

// Reference implementation, always available.
extern const Kernel kScalarKernel;

#if defined(LATWALK_HAVE_AVX2_KERNEL)
extern const Kernel kAvx2Kernel;
#endif

bool cpu_has_avx2();

// Resolves a kernel request. auto_detect picks the widest kernel the CPU
// supports; an explicit request for an unavailable kernel throws ConfigError.
const Kernel& select_kernel(KernelKind kind);

}  // namespace latwalk::sim
