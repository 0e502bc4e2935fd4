#pragma once

#include <cstdint>

#include "latwalk/prob.hpp"

// Counter-based random streams for the simulator.
//
// Stream derivation contract (stable across versions and platforms; the
// SIMD kernels reimplement it lane-wise and are equivalence-tested against
// this definition):
//
//   gamma          = 0x9E3779B97F4A7C15
//   mix64(z)       = Stafford "mix13" finalizer (see below)
//   state0(s, t)   = mix64(s + gamma * (t + 1))     s = master seed, t = trial
//   draw k         : state_k = state_{k-1} + gamma;  u_k = mix64(state_k)
//
// Every trial is a pure function of (master_seed, trial_index), so results
// are independent of batching, threading and instruction set.

namespace latwalk::sim {

inline constexpr std::uint64_t kStreamGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

struct TrialStream {
    std::uint64_t state = 0;
};

constexpr TrialStream make_stream(std::uint64_t master_seed,
                                  std::uint64_t trial_index) {
    return TrialStream{mix64(master_seed + kStreamGamma * (trial_index + 1))};
}

constexpr std::uint64_t next_u64(TrialStream& s) {
    s.state += kStreamGamma;
    return mix64(s.state);
}

// Threshold T such that (u < T) for a uniform 64-bit u models an up-step.
// Rational bias: T = floor(2^64 * num / (num + den)) in exact integer
// arithmetic, so there is no floating-point boundary bias. Floating bias:
// nearest representable scaling of beta/(beta+1).
std::uint64_t up_threshold(const prob::BiasSpec& beta);

enum class Step : std::uint8_t { right = 0, up = 1 };

// One biased step. Consumes exactly one draw.
inline Step sample_step(std::uint64_t up_thresh, TrialStream& s) {
    return next_u64(s) < up_thresh ? Step::up : Step::right;
}

inline Step sample_step(const prob::BiasSpec& beta, TrialStream& s) {
    return sample_step(up_threshold(beta), s);
}

}  // namespace latwalk::sim
