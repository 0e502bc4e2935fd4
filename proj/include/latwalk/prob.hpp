#pragma once

#include <optional>
#include <utility>

#include "latwalk/exact.hpp"
#include "latwalk/roots.hpp"

// Analytic crossing and hitting probabilities of the beta-biased monotone
// walk against the line y = p*x + d, plus the truncated-series lower bound
// and the large-p approximation.

namespace latwalk::prob {

// Up-step odds: the walk steps up with probability beta/(beta+1) and right
// with probability 1/(beta+1). When the bias was given as an exact rational
// it is kept; series evaluation and step-sampling thresholds then stay exact.
struct BiasSpec {
    double value = 1.0;
    std::optional<comb::Rat> exact;

    BiasSpec() = default;
    explicit BiasSpec(double beta) : value(beta) {}
    explicit BiasSpec(const comb::Rat& beta)
        : value(beta.convert_to<double>()), exact(beta) {}
};

// Target line y = alpha*x + d with rational slope and intercept.
struct LineSpec {
    comb::Rat alpha;
    comb::Rat d;
};

enum class Method { root, series, asymptotic };

struct ProbResult {
    double value = 0.0;
    Method method = Method::root;
    roots::RootResult root;                // filled for Method::root
    int n_terms = 0;                       // filled for Method::series
    double x1 = 0.0;                       // filled for Method::asymptotic
    std::optional<comb::Rat> exact;        // exact series value when available
};

// Probability that the walk ever reaches a lattice point strictly above
// y = p*x + d; equals solve_phi0(beta,p)^(d+1). Requires p >= 1.
ProbResult phi(const BiasSpec& beta, int p, int d,
               const roots::RootConfig& cfg = {});

// Slope-zero line y = d: crossed with probability 1 for every beta > 0.
ProbResult phi_p0(const BiasSpec& beta, int d);

// Probability of meeting a lattice point ON y = p*x + d after departure.
// d > 0: phi0^d. d = 0: 2 (1 - (beta/(beta+1)) / phi0), and p = 0 with d = 0
// is rejected: the reflection argument behind the factor 2 has no analogue
// for a horizontal line, a monotone walk above it never returns.
ProbResult psi(const BiasSpec& beta, int p, int d,
               const roots::RootConfig& cfg = {});

// Truncated series sum_{n<N} S(n,d) beta^(pn+d+1) / (beta+1)^(pn+n+d+1) with
// S(n,d) from dp_count (S(n,0) = M(p,n)). Terms are positive, so this is a
// lower bound of phi(beta,p,d) at every truncation. Exact rational betas are
// summed exactly; floating betas use compensated summation in log space.
ProbResult phi_series(const BiasSpec& beta, int p, int d, int n_terms);

// Large-p approximation (beta/(beta+1)) (1 + x1), x1 = beta^p/(beta+1)^(p+1).
// Only meaningful for beta < p (otherwise phi is exactly 1); rejects beta >= p.
ProbResult phi_asymptotic(const BiasSpec& beta, int p);

// Integer bracket for the critical slope: (floor(beta), floor(beta)+1).
std::pair<long, long> alpha_beta_bounds(const BiasSpec& beta);

}  // namespace latwalk::prob
