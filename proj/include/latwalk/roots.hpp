#pragma once

#include <cstdint>

#include "latwalk/errors.hpp"

// Bracketed scalar root finding for the implicit equations behind the
// generating functions G_p, H_p and the crossing probability. All solvers
// bisect a monotone bracket and then polish with Newton steps, so they
// cannot escape the bracket or pick up a spurious root.

namespace latwalk::roots {

struct RootConfig {
    double tol = 1e-12;   // absolute tolerance on the root value
    int max_iter = 200;   // bisection iteration cap
};

struct RootResult {
    double value = 0.0;
    double residual = 0.0;   // |f(value)| of the solved equation
    int iterations = 0;      // bisection + polish steps
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

// Convergence domain of H_p and G_p: |x| <= x_max = p^p/(p+1)^(p+1),
// attained by z(1-z)^p at z_star = 1/(p+1).
struct DomainBound {
    int p = 1;
    double x_max = 0.0;
    double z_star = 0.0;
};

DomainBound domain_bound(int p);

// Smallest nonnegative root of z(1-z)^p = x. The map is increasing on
// [0, 1/(p+1)], which gives the a-priori bracket. x within tol above x_max
// is clamped to x_max (the boundary value is attained); anything further out
// throws DomainError.
RootResult solve_G(int p, double x, const RootConfig& cfg = {});

// H_p(x): smallest positive root of x y^(p+1) = y - 1, computed as
// 1/(1 - solve_G(p,x)). Solving G first keeps the bracket a priori; the
// direct H equation has a second root above it that naive bisection can
// capture. Residual reported against the H equation itself.
RootResult solve_H(int p, double x, const RootConfig& cfg = {});

// Phi_beta(p,0): smallest positive root of y^(p+1) - (beta+1) y + beta = 0.
// For beta >= p this is exactly 1. Otherwise the factor (y-1) is removed
// symbolically and the strictly increasing polynomial
// y^p + y^(p-1) + ... + y - beta is bisected on [0,1]; deflating avoids the
// cancellation between the two colliding roots near beta ~ p. Residual is
// reported against the deflated polynomial.
RootResult solve_phi0(double beta, int p, const RootConfig& cfg = {});

// x^e by repeated squaring; bit-reproducible wherever it is reused.
double powi(double x, std::uint64_t e);

}  // namespace latwalk::roots
