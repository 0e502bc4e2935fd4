#include "latwalk/exact.hpp"

#include <boost/multiprecision/integer.hpp>

#include <charconv>
#include <sstream>

namespace latwalk::comb {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw DomainError(msg);
}

}  // namespace

BigCount binom(unsigned a, unsigned b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    BigCount r = 1;
    // r stays integral at every step: after the i-th iteration it equals
    // C(a - b + i, i).
    for (unsigned i = 1; i <= b; ++i) {
        r *= a - b + i;
        BigCount q, rem;
        boost::multiprecision::divide_qr(r, BigCount(i), q, rem);
        if (!rem.is_zero()) throw std::logic_error("binom: non-exact division");
        r = q;
    }
    return r;
}

BigCount catalan_M(int p, int n) {
    require(p >= 1, "catalan_M: p must be >= 1");
    require(n >= 0, "catalan_M: n must be >= 0");
    const unsigned m = static_cast<unsigned>(p) * n + n + 1;
    BigCount c = binom(m, static_cast<unsigned>(n));
    BigCount q, rem;
    boost::multiprecision::divide_qr(c, BigCount(m), q, rem);
    if (!rem.is_zero())
        throw std::logic_error("catalan_M: C(pn+n+1, n) not divisible by pn+n+1");
    return q;
}

std::vector<BigCount> catalan_M_table(int p, int n_max) {
    require(p >= 1 && n_max >= 0, "catalan_M_table: bad arguments");
    std::vector<BigCount> t;
    t.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) t.push_back(catalan_M(p, n));
    return t;
}

CountTable dp_count(int p, int d, int n_max, PathKind kind) {
    require(p >= 1, "dp_count: p must be >= 1");
    require(d >= 0, "dp_count: d must be >= 0");
    require(n_max >= 0, "dp_count: n_max must be >= 0");

    // Height limit for points that must respect the boundary. Endpoints of
    // strictly_below paths are exempt and handled when reading entries off.
    const auto limit = [&](long a) -> long {
        const long line = p * a + d;
        return kind == PathKind::weakly_below ? line : line - 1;
    };

    CountTable out{p, d, kind, {}};
    out.entries.resize(static_cast<std::size_t>(n_max) + 1);

    // ways[b] = paths from the origin to (a, b) through admissible points.
    // Column 0 always contains the origin even when limit(0) < 0.
    std::vector<BigCount> ways;
    const long h0 = std::max(limit(0), 0L);
    ways.resize(static_cast<std::size_t>(h0) + 1, BigCount(0));
    ways[0] = 1;
    for (long b = 1; b <= limit(0); ++b) ways[b] = ways[b - 1];

    const auto read_entry = [&](int n, const std::vector<BigCount>& col) {
        const long target = static_cast<long>(p) * n + d;
        if (kind == PathKind::weakly_below) {
            out.entries[n] = col[target];
        } else if (n == 0) {
            out.entries[0] = d > 0 ? 1 : 0;  // straight-up path; empty path excluded
        } else {
            // A strict path enters its endpoint with an up-step from
            // (n, target-1); the right-step predecessor sits above the line.
            out.entries[n] = col[target - 1];
        }
    };
    read_entry(0, ways);

    for (int a = 1; a <= n_max; ++a) {
        const long prev_limit = limit(a - 1);
        const long cur_limit = limit(a);
        std::vector<BigCount> cur(static_cast<std::size_t>(cur_limit) + 1,
                                  BigCount(0));
        for (long b = 0; b <= cur_limit; ++b) {
            if (b <= prev_limit && b < static_cast<long>(ways.size()))
                cur[b] = ways[b];
            if (b > 0) cur[b] += cur[b - 1];
        }
        read_entry(a, cur);
        ways = std::move(cur);
    }
    return out;
}

std::vector<BigCount> first_passage_N(int p, int n_max) {
    require(p >= 1 && n_max >= 0, "first_passage_N: bad arguments");
    const auto M = catalan_M_table(p, n_max);
    std::vector<BigCount> N(static_cast<std::size_t>(n_max) + 1, BigCount(0));
    for (int n = 1; n <= n_max; ++n) {
        BigCount acc = M[n];
        for (int m = 1; m < n; ++m) acc -= N[m] * M[n - m];
        if (acc < 0)
            throw std::logic_error("first_passage_N: negative count from inversion");
        N[n] = std::move(acc);
    }
    return N;
}

Rat gen_binom(const Rat& r, unsigned l) {
    Rat acc = 1;
    BigCount fact = 1;
    for (unsigned i = 0; i < l; ++i) {
        acc *= r - i;
        fact *= i + 1;
    }
    return acc / Rat(fact);
}

Rat check_identity_zero(const Rat& alpha, int k) {
    require(k >= 1, "check_identity_zero: k must be >= 1");
    Rat sum = 0;
    for (int n = 0; n <= k; ++n) {
        const Rat top = (alpha + 1) * n;  // n*alpha + n
        Rat term = Rat(binom(static_cast<unsigned>(k), static_cast<unsigned>(n))) *
                   gen_binom(top, static_cast<unsigned>(k - 1));
        if (n % 2) sum -= term; else sum += term;
    }
    return sum;
}

Rat rat_pow(const Rat& q, unsigned e) {
    Rat base = q, acc = 1;
    while (e) {
        if (e & 1u) acc *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return acc;
}

Rat partial_sum_prop21(int p, const Rat& z, int n_terms) {
    require(p >= 1, "partial_sum_prop21: p must be >= 1");
    require(n_terms >= 1, "partial_sum_prop21: n_terms must be >= 1");
    if (z < 0 || z >= Rat(1, p + 1))
        throw DomainError("partial_sum_prop21: z outside [0, 1/(p+1))");
    const auto M = catalan_M_table(p, n_terms - 1);
    const Rat one_minus = 1 - z;
    Rat sum = 0;
    for (int n = 0; n < n_terms; ++n) {
        sum += Rat(M[n]) * rat_pow(z, static_cast<unsigned>(n)) *
               rat_pow(one_minus, static_cast<unsigned>(p * n + 1));
    }
    return sum;
}

bool s_convolution_check(int p, int d, int n_max) {
    const auto s_d = dp_count(p, d, n_max, PathKind::weakly_below).entries;
    const auto s_d1 = dp_count(p, d + 1, n_max, PathKind::weakly_below).entries;
    const auto s_0 = dp_count(p, 0, n_max, PathKind::weakly_below).entries;
    for (int n = 0; n <= n_max; ++n) {
        BigCount conv = 0;
        for (int i = 0; i <= n; ++i) conv += s_d[i] * s_0[n - i];
        if (conv != s_d1[n]) return false;
    }
    return true;
}

Rat parse_rational(std::string_view text) {
    const auto bad = [&] {
        throw ConfigError("cannot parse rational: '" + std::string(text) + "'");
    };
    if (text.empty()) bad();

    bool neg = false;
    std::string_view s = text;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) bad();

    const auto digits_ok = [](std::string_view v) {
        if (v.empty()) return false;
        for (char c : v)
            if (c < '0' || c > '9') return false;
        return true;
    };

    const auto to_big = [](std::string_view v) {
        return v.empty() ? BigCount(0) : BigCount{std::string(v)};
    };

    Rat result;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        const auto num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!digits_ok(num) || !digits_ok(den)) bad();
        const BigCount d = to_big(den);
        if (d.is_zero()) bad();
        result = Rat(to_big(num), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        const auto whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (!whole.empty() && !digits_ok(whole)) bad();
        if (!frac.empty() && !digits_ok(frac)) bad();
        if (whole.empty() && frac.empty()) bad();
        BigCount scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        result = Rat(to_big(whole) * scale + to_big(frac), scale);
    } else {
        if (!digits_ok(s)) bad();
        result = Rat(to_big(s));
    }
    return neg ? -result : result;
}

std::string rat_to_string(const Rat& q) {
    std::ostringstream os;
    const BigCount num = boost::multiprecision::numerator(q);
    const BigCount den = boost::multiprecision::denominator(q);
    os << num;
    if (den != 1) os << '/' << den;
    return os.str();
}

}  // namespace latwalk::comb
