#include "latwalk/roots.hpp"

#include <cmath>
#include <functional>

namespace latwalk::roots {

namespace {

double ipow_small(double x, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

// Bisection on an increasing function with f(lo) <= 0 <= f(hi), followed by
// bracket-clamped Newton polish. Returns value/iterations/bracket.
struct Solved {
    double value;
    int iterations;
    double lo, hi;
};

Solved bisect_increasing(const std::function<double(double)>& f,
                         const std::function<double(double)>& df,
                         double lo, double hi, const RootConfig& cfg) {
    double flo = f(lo);
    double fhi = f(hi);
    int iters = 0;
    if (flo >= 0.0) return {lo, 0, lo, hi};
    if (fhi <= 0.0) return {hi, 0, lo, hi};
    while (iters < cfg.max_iter && (hi - lo) > cfg.tol * 1e-3 + 1e-17) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval at rounding limit
        const double fm = f(mid);
        ++iters;
        if (fm <= 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    double x = 0.5 * (lo + hi);
    for (int k = 0; k < 3; ++k) {
        const double fx = f(x);
        const double dfx = df(x);
        if (dfx == 0.0) break;
        double next = x - fx / dfx;
        if (!(next > lo && next < hi)) break;  // keep the bracket guarantee
        x = next;
        ++iters;
    }
    return {x, iters, lo, hi};
}

}  // namespace

double powi(double x, std::uint64_t e) {
    double base = x, acc = 1.0;
    while (e) {
        if (e & 1u) acc *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return acc;
}

DomainBound domain_bound(int p) {
    if (p < 1) throw DomainError("domain_bound: p must be >= 1");
    // p^p and (p+1)^(p+1) are exact in double well past desk scale.
    const double x_max = ipow_small(static_cast<double>(p), p) /
                         ipow_small(static_cast<double>(p + 1), p + 1);
    return DomainBound{p, x_max, 1.0 / (p + 1)};
}

RootResult solve_G(int p, double x, const RootConfig& cfg) {
    const DomainBound dom = domain_bound(p);
    if (x < 0.0) throw DomainError("solve_G: x must be >= 0");
    if (x > dom.x_max + cfg.tol)
        throw DomainError("solve_G: x beyond p^p/(p+1)^(p+1)");
    if (x > dom.x_max) x = dom.x_max;  // boundary value is attained

    const auto f = [&](double z) { return z * ipow_small(1.0 - z, p) - x; };
    const auto df = [&](double z) {
        return ipow_small(1.0 - z, p - 1) * (1.0 - (p + 1) * z);
    };

    RootResult r;
    if (x == 0.0) {
        r = {0.0, 0.0, 0, 0.0, dom.z_star};
    } else if (x == dom.x_max) {
        // Maximizer of z(1-z)^p; f' vanishes here, so bisection has no sign
        // change to work with. The root is the bracket end itself.
        r = {dom.z_star, std::abs(f(dom.z_star)), 0, 0.0, dom.z_star};
        return r;
    } else {
        const Solved s = bisect_increasing(f, df, 0.0, dom.z_star, cfg);
        r = {s.value, std::abs(f(s.value)), s.iterations, s.lo, s.hi};
    }
    r.residual = std::abs(f(r.value));
    return r;
}

RootResult solve_H(int p, double x, const RootConfig& cfg) {
    RootResult g = solve_G(p, x, cfg);
    const double h = 1.0 / (1.0 - g.value);
    RootResult r = g;
    r.value = h;
    r.residual = std::abs(x * ipow_small(h, p + 1) - (h - 1.0));
    r.bracket_lo = 1.0 / (1.0 - g.bracket_lo);
    r.bracket_hi = 1.0 / (1.0 - g.bracket_hi);
    return r;
}

RootResult solve_phi0(double beta, int p, const RootConfig& cfg) {
    if (!(beta > 0.0)) throw DomainError("solve_phi0: beta must be > 0");
    if (p < 1) throw DomainError("solve_phi0: p must be >= 1");
    if (beta >= static_cast<double>(p)) {
        // y = 1 is the smallest positive root: any smaller root of the
        // deflated factor would force beta < p.
        return RootResult{1.0, 0.0, 0, 1.0, 1.0};
    }
    // Deflated polynomial q(y) = y^p + ... + y - beta, strictly increasing
    // for y >= 0 with q(0) < 0 < q(1).
    const auto q = [&](double y) {
        double acc = 0.0;
        for (int k = 0; k < p; ++k) acc = (acc + 1.0) * y;
        return acc - beta;
    };
    const auto dq = [&](double y) {
        double acc = 0.0;
        for (int k = p; k >= 1; --k) acc = acc * y + k;
        return acc;
    };
    const Solved s = bisect_increasing(q, dq, 0.0, 1.0, cfg);
    return RootResult{s.value, std::abs(q(s.value)), s.iterations, s.lo, s.hi};
}

}  // namespace latwalk::roots
