#include "trico/univariate.hpp"

#include <algorithm>
#include <bit>

namespace trico {

namespace {

bool dense_is_zero(const std::vector<Rational>& f) {
    for (const auto& c : f)
        if (c != 0) return false;
    return true;
}

void dense_trim(std::vector<Rational>& f) {
    while (f.size() > 1 && f.back() == 0) f.pop_back();
}

std::vector<Rational> dense_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
    while (!dense_is_zero(a) && a.size() >= b.size()) {
        Rational q = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        dense_trim(a);
        if (a.size() == 1 && a[0] == 0) break;
    }
    return a;
}

// all positive divisors, by trial division
std::vector<Int> divisors_of(Int n) {
    if (n < 0) n = -n;
    std::vector<std::pair<Int, unsigned>> fact;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        fact.push_back({p, e});
    }
    if (n > 1) fact.push_back({n, 1});
    std::vector<Int> divs{1};
    for (const auto& [p, e] : fact) {
        std::size_t base = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Rational dense_eval(const std::vector<Rational>& f, const Rational& x) {
    Rational v = 0;
    for (std::size_t k = f.size(); k-- > 0;) v = v * x + f[k];
    return v;
}

// divide by (x - r); pre: r is a root
std::vector<Rational> deflate(const std::vector<Rational>& f, const Rational& r) {
    std::vector<Rational> q(f.size() - 1);
    Rational carry = 0;
    for (std::size_t k = f.size(); k-- > 1;) {
        carry = f[k] + r * carry;
        q[k - 1] = carry;
    }
    return q;
}

}  // namespace

std::vector<Rational> gcd_dense(std::vector<Rational> a, std::vector<Rational> b) {
    dense_trim(a);
    dense_trim(b);
    while (!dense_is_zero(b)) {
        auto r = dense_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (dense_is_zero(a)) return a;
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

RationalRoots rational_roots_dense(std::vector<Rational> f) {
    dense_trim(f);
    if (dense_is_zero(f)) throw MathError("rational roots of the zero polynomial");
    RationalRoots out;
    if (f.size() == 1) return out;

    unsigned zero_mult = 0;
    while (f[0] == 0) {
        f.erase(f.begin());
        ++zero_mult;
    }

    if (f.size() > 1) {
        // integer primitive version for the rational root candidates
        Int den_lcm = 1;
        for (const auto& c : f) den_lcm = lcm(den_lcm, den(c));
        std::vector<Int> zc(f.size());
        Int content = 0;
        for (std::size_t k = 0; k < f.size(); ++k) {
            zc[k] = num(f[k] * Rational(den_lcm));
            content = gcd(content, zc[k]);
        }
        std::vector<Rational> cands;
        for (const Int& p : divisors_of(zc.front() / content))
            for (const Int& q : divisors_of(zc.back() / content)) {
                Rational r(p, q);
                if (num(r) == p && den(r) == q) {
                    cands.push_back(r);
                    cands.push_back(-r);
                }
            }
        std::sort(cands.begin(), cands.end());
        for (const auto& r : cands) {
            unsigned mult = 0;
            while (f.size() > 1 && dense_eval(f, r) == 0) {
                f = deflate(f, r);
                ++mult;
            }
            if (mult) out.roots.push_back({r, mult});
            if (f.size() == 1) break;
        }
    }

    if (zero_mult) out.roots.push_back({Rational(0), zero_mult});
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.cofactor_degree = static_cast<unsigned>(f.size() - 1);
    return out;
}

RationalRoots univariate_rational_roots(const MultiPoly& p, const std::string& var) {
    if (p.is_zero()) throw MathError("rational roots of the zero polynomial");
    std::size_t vi = var_index(p.vars, var);
    for (const auto& t : p.terms)
        for (std::size_t j = 0; j < t.e.size(); ++j)
            if (j != vi && t.e[j] > 0)
                throw MathError("univariate_rational_roots: polynomial involves '" + p.vars[j] +
                                "'");
    std::vector<Rational> f(deg_in(p, var) + 1, Rational(0));
    for (const auto& t : p.terms) f[t.e[vi]] += t.c;
    return rational_roots_dense(std::move(f));
}

MultiPoly resultant_in(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    if (f.vars != g.vars) throw MathError("resultant over different variable lists");
    if (f.is_zero() || g.is_zero()) throw MathError("resultant of the zero polynomial");
    unsigned m = deg_in(f, var), n = deg_in(g, var);
    unsigned N = m + n;
    if (N == 0) return poly_const(f.vars, 1);
    if (N > 16) throw MathError("resultant: Sylvester matrix too large");

    std::vector<MultiPoly> fc, gc;
    for (unsigned k = 0; k <= m; ++k) fc.push_back(coeff_in(f, var, k));
    for (unsigned k = 0; k <= n; ++k) gc.push_back(coeff_in(g, var, k));
    auto entry = [&](unsigned r, unsigned j) -> const MultiPoly* {
        if (r < n) {
            if (j < r || j > r + m) return nullptr;
            return &fc[m - (j - r)];
        }
        unsigned i = r - n;
        if (j < i || j > i + n) return nullptr;
        return &gc[n - (j - i)];
    };

    // row-by-row Laplace expansion over column subsets
    std::vector<MultiPoly> dp(std::size_t(1) << N, poly_zero(f.vars));
    dp[0] = poly_const(f.vars, 1);
    for (unsigned r = 0; r < N; ++r) {
        std::vector<MultiPoly> next(std::size_t(1) << N, poly_zero(f.vars));
        for (std::size_t mask = 0; mask < dp.size(); ++mask) {
            if (static_cast<unsigned>(std::popcount(mask)) != r || dp[mask].is_zero()) continue;
            for (unsigned j = 0; j < N; ++j) {
                if (mask & (std::size_t(1) << j)) continue;
                const MultiPoly* a = entry(r, j);
                if (!a || a->is_zero()) continue;
                // sign flips once per already-chosen column to the right of j
                int sgn = std::popcount(mask >> (j + 1)) % 2 ? -1 : 1;
                std::size_t m2 = mask | (std::size_t(1) << j);
                MultiPoly contrib = dp[mask] * *a;
                next[m2] = sgn > 0 ? next[m2] + contrib : next[m2] - contrib;
            }
        }
        dp = std::move(next);
    }
    return dp[(std::size_t(1) << N) - 1];
}

}  // namespace trico
