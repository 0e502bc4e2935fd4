#include "latwalk/prob.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>

namespace latwalk::prob {

namespace {

using comb::BigCount;
using comb::Rat;

// Natural log of a positive big integer without overflow: mantissa of the
// top 53 bits plus an exponent correction.
double log_big(const BigCount& v) {
    const unsigned bits = boost::multiprecision::msb(v) + 1;
    if (bits <= 1020) return std::log(v.convert_to<double>());
    const unsigned shift = bits - 53;
    const BigCount top = v >> shift;
    return std::log(top.convert_to<double>()) + shift * 0.6931471805599453;
}

// S(n,d) for n < n_terms. S(n,0) = M(p,n); larger intercepts come from the
// counting DP.
std::vector<BigCount> s_table(int p, int d, int n_terms) {
    if (d == 0) return comb::catalan_M_table(p, n_terms - 1);
    return comb::dp_count(p, d, n_terms - 1, comb::PathKind::weakly_below)
        .entries;
}

}  // namespace

ProbResult phi(const BiasSpec& beta, int p, int d,
               const roots::RootConfig& cfg) {
    if (p < 1) throw DomainError("phi: p must be >= 1 (use phi_p0 for p = 0)");
    if (d < 0) throw DomainError("phi: d must be >= 0");
    const roots::RootResult r = roots::solve_phi0(beta.value, p, cfg);
    ProbResult out;
    out.method = Method::root;
    out.root = r;
    out.value = roots::powi(r.value, static_cast<std::uint64_t>(d) + 1);
    return out;
}

ProbResult phi_p0(const BiasSpec& beta, int d) {
    if (!(beta.value > 0.0)) throw DomainError("phi_p0: beta must be > 0");
    if (d < 0) throw DomainError("phi_p0: d must be >= 0");
    ProbResult out;
    out.method = Method::root;
    out.root = roots::RootResult{1.0, 0.0, 0, 1.0, 1.0};
    out.value = 1.0;
    return out;
}

ProbResult psi(const BiasSpec& beta, int p, int d,
               const roots::RootConfig& cfg) {
    if (p < 0 || d < 0) throw DomainError("psi: p and d must be >= 0");
    if (p == 0) {
        if (d == 0)
            throw DomainError(
                "psi: undefined for p = 0, d = 0 (no return to a horizontal "
                "line through the start)");
        ProbResult out;
        out.method = Method::root;
        out.root = roots::RootResult{1.0, 0.0, 0, 1.0, 1.0};
        out.value = 1.0;  // phi0(beta, 0)^d with phi0 = 1
        return out;
    }
    const roots::RootResult r = roots::solve_phi0(beta.value, p, cfg);
    ProbResult out;
    out.method = Method::root;
    out.root = r;
    if (d > 0) {
        out.value = roots::powi(r.value, static_cast<std::uint64_t>(d));
    } else {
        const double frac = beta.value / (beta.value + 1.0);
        double v = 2.0 * (1.0 - frac / r.value);
        // Probabilities cannot leave [0,1]; only rounding noise may.
        if (v < 0.0 && v > -10 * cfg.tol) v = 0.0;
        if (v > 1.0 && v < 1.0 + 10 * cfg.tol) v = 1.0;
        out.value = v;
    }
    return out;
}

ProbResult phi_series(const BiasSpec& beta, int p, int d, int n_terms) {
    if (p < 1) throw DomainError("phi_series: p must be >= 1");
    if (d < 0) throw DomainError("phi_series: d must be >= 0");
    if (n_terms < 1) throw DomainError("phi_series: n_terms must be >= 1");

    const auto counts = s_table(p, d, n_terms);
    ProbResult out;
    out.method = Method::series;
    out.n_terms = n_terms;

    if (beta.exact) {
        const BigCount bn = boost::multiprecision::numerator(*beta.exact);
        const BigCount bd = boost::multiprecision::denominator(*beta.exact);
        if (bn <= 0) throw DomainError("phi_series: beta must be > 0");
        const BigCount s = bn + bd;
        Rat sum = 0;
        for (int n = 0; n < n_terms; ++n) {
            const unsigned en = static_cast<unsigned>(p) * n + d + 1;
            const unsigned ed = en + n;
            // beta^(pn+d+1) / (beta+1)^(pn+n+d+1) = bn^en bd^n / s^ed
            Rat term(counts[n] * boost::multiprecision::pow(bn, en) *
                         boost::multiprecision::pow(bd, static_cast<unsigned>(n)),
                     boost::multiprecision::pow(s, ed));
            sum += term;
        }
        out.exact = sum;
        out.value = sum.convert_to<double>();
        return out;
    }

    if (!(beta.value > 0.0)) throw DomainError("phi_series: beta must be > 0");
    const double lb = std::log(beta.value);
    const double ls = std::log1p(beta.value);
    double sum = 0.0, comp = 0.0;  // Kahan
    for (int n = 0; n < n_terms; ++n) {
        const double en = static_cast<double>(p) * n + d + 1;
        const double term = std::exp(log_big(counts[n]) + en * lb - (en + n) * ls);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    out.value = sum;
    return out;
}

ProbResult phi_asymptotic(const BiasSpec& beta, int p) {
    if (p < 1) throw DomainError("phi_asymptotic: p must be >= 1");
    if (!(beta.value > 0.0))
        throw DomainError("phi_asymptotic: beta must be > 0");
    if (beta.value >= static_cast<double>(p))
        throw DomainError(
            "phi_asymptotic: requires beta < p (phi is exactly 1 otherwise)");
    const double denom = roots::powi(beta.value + 1.0, p + 1);
    const double x1 =
        std::isfinite(denom)
            ? roots::powi(beta.value, p) / denom
            : std::exp(p * std::log(beta.value) - (p + 1) * std::log1p(beta.value));
    ProbResult out;
    out.method = Method::asymptotic;
    out.x1 = x1;
    out.value = beta.value / (beta.value + 1.0) * (1.0 + x1);
    return out;
}

std::pair<long, long> alpha_beta_bounds(const BiasSpec& beta) {
    if (!(beta.value > 0.0))
        throw DomainError("alpha_beta_bounds: beta must be > 0");
    long fl;
    if (beta.exact) {
        const BigCount bn = boost::multiprecision::numerator(*beta.exact);
        const BigCount bd = boost::multiprecision::denominator(*beta.exact);
        fl = static_cast<long>(BigCount(bn / bd).convert_to<long long>());
    } else {
        fl = static_cast<long>(std::floor(beta.value));
    }
    return {fl, fl + 1};
}

}  // namespace latwalk::prob
