#pragma once

#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latwalk/errors.hpp"

// Exact combinatorics for monotone lattice paths relative to a line
// y = p*x + d: closed-form counts, dynamic-programming counting tables,
// convolution relations and rational identity checks. Everything here is
// arbitrary precision; nothing rounds.

namespace latwalk::comb {

using BigCount = boost::multiprecision::cpp_int;       // nonnegative path counts
using Rat = boost::multiprecision::cpp_rational;       // exact rationals, lowest terms

// C(a, b); 0 when b > a.
BigCount binom(unsigned a, unsigned b);

// Generalized Catalan number M(p,n) = C((p+1)n+1, n) / ((p+1)n+1).
// The division is exact; a nonzero remainder throws (it would mean the
// closed form itself is being misused and every downstream check is void).
BigCount catalan_M(int p, int n);

// M(p,0..n_max) in one pass.
std::vector<BigCount> catalan_M_table(int p, int n_max);

enum class PathKind {
    weakly_below,    // every lattice point satisfies b <= p*a + d
    strictly_below,  // every interior point satisfies b < p*a + d
};

struct CountTable {
    int p = 1;
    int d = 0;
    PathKind kind = PathKind::weakly_below;
    std::vector<BigCount> entries;  // entries[n] = paths (0,0) -> (n, p*n+d)
};

// Count monotone paths from (0,0) to (n, p*n+d) for n = 0..n_max by dynamic
// programming over lattice columns. The boundary rule is a height limit per
// column: p*a + d for weakly_below, p*a + d - 1 for interior points of
// strictly_below (endpoints exempt). Never uses the closed form, so it can
// serve as the independent oracle for it.
CountTable dp_count(int p, int d, int n_max, PathKind kind);

// First-passage counts N(p,n) obtained by inverting the convolution
// M(p,n) = sum_{m=0}^{n} N(p,m) M(p,n-m), with N(p,0) = 0.
std::vector<BigCount> first_passage_N(int p, int n_max);

// Generalized binomial coefficient C(r, l) for rational r: the falling
// factorial r(r-1)...(r-l+1) divided by l!. C(r, 0) = 1.
Rat gen_binom(const Rat& r, unsigned l);

// sum_{n=0}^{k} (-1)^n C(k,n) C(n*alpha + n, k-1), evaluated exactly.
// The identity says this is 0 for every real alpha and every k >= 1.
Rat check_identity_zero(const Rat& alpha, int k);

// Partial sum sum_{n < n_terms} M(p,n) z^n (1-z)^{p n + 1}, exact.
// Requires 0 <= z < 1/(p+1); outside that interval the full series is not
// known to converge and the call is refused.
Rat partial_sum_prop21(int p, const Rat& z, int n_terms);

// Checks S(n,d+1) = sum_{i=0}^n S(i,d) S(n-i,0) for all n <= n_max, with the
// S tables produced by dp_count. Used as a test oracle.
bool s_convolution_check(int p, int d, int n_max);

// q^e for nonnegative integer e.
Rat rat_pow(const Rat& q, unsigned e);

// Parses "7/3", "42", "1.75", "-0.5" into an exact rational.
Rat parse_rational(std::string_view text);

// Lowest-terms decimal-ish rendering: "num/den", or just "num" when den == 1.
std::string rat_to_string(const Rat& q);

}  // namespace latwalk::comb
