#include "trico/groebner.hpp"

#include "trico/univariate.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>

namespace trico {

namespace {

struct Ord {
    MonomialOrder kind;

    int cmp(const Exps& a, const Exps& b) const {
        if (kind == MonomialOrder::Lex) {
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        }
        unsigned long da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da < db ? -1 : 1;
        // grevlex tie break: larger exponent in the last differing
        // position means the smaller monomial
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }
};

// term vector sorted descending in the active order
using Tv = std::vector<Term>;

Tv to_ord(const MultiPoly& p, const Ord& o) {
    Tv t = p.terms;
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return o.cmp(a.e, b.e) > 0; });
    return t;
}

MultiPoly from_ord(const std::vector<std::string>& vars, Tv t) {
    std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return grlex_cmp(a.e, b.e) > 0; });
    MultiPoly p;
    p.vars = vars;
    p.terms = std::move(t);
    return p;
}

bool divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exps exp_add(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        unsigned long s = static_cast<unsigned long>(a[i]) + b[i];
        if (s > 0x7fffffffUL) throw MathError("exponent overflow");
        r[i] = static_cast<unsigned>(s);
    }
    return r;
}

unsigned long exp_deg(const Exps& e) {
    unsigned long d = 0;
    for (unsigned x : e) d += x;
    return d;
}

bool tv_is_constant(const Tv& t) { return t.size() == 1 && exp_deg(t[0].e) == 0; }

// positive factor that rescales p onto integer coefficients with content 1;
// the caller folds it into its running scale when exactness matters
Rational strip_content(Tv& p) {
    if (p.empty()) return Rational(1);
    Int g = 0, l = 1;
    for (const Term& t : p) {
        g = gcd(g, num(t.c));
        l = lcm(l, den(t.c));
    }
    Rational f(l, g);
    if (f != 1)
        for (Term& t : p) t.c *= f;
    return f;
}

// integer-primitive scaling with positive leading coefficient
void make_primitive(Tv& p) {
    strip_content(p);
    if (!p.empty() && p[0].c < 0)
        for (Term& t : p) t.c = -t.c;
}

// a*p + b*(x^shift * g) skipping the cancelling heads at p[idx] and g[0];
// terms before idx are carried over untouched apart from the factor a
Tv combine(const Tv& p, std::size_t idx, const Rational& a, const Rational& b, const Exps& shift,
           const Tv& g, const Ord& o) {
    Tv r;
    r.reserve(p.size() + g.size());
    for (std::size_t k = 0; k < idx; ++k) r.push_back({p[k].e, a * p[k].c});
    std::size_t i = idx + 1, j = 1;
    while (i < p.size() && j < g.size()) {
        Exps ge = exp_add(g[j].e, shift);
        int cm = o.cmp(p[i].e, ge);
        if (cm > 0) {
            r.push_back({p[i].e, a * p[i].c});
            ++i;
        } else if (cm < 0) {
            r.push_back({std::move(ge), b * g[j].c});
            ++j;
        } else {
            Rational s = a * p[i].c + b * g[j].c;
            if (s != 0) r.push_back({p[i].e, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < p.size(); ++i) r.push_back({p[i].e, a * p[i].c});
    for (; j < g.size(); ++j) r.push_back({exp_add(g[j].e, shift), b * g[j].c});
    return r;
}

// Fraction-free full normal form.  Intermediates stay integer-primitive, so
// the result is the true normal form times a positive rational; pass `exact`
// to divide that factor back out.
Tv normal_form_tv(Tv p, const std::vector<Tv>& basis, const Ord& o, bool exact = false) {
    Rational scale = strip_content(p);
    std::size_t idx = 0;
    while (idx < p.size()) {
        const Tv* best = nullptr;
        for (const Tv& g : basis)
            if (!g.empty() && divides(g[0].e, p[idx].e))
                if (!best || g.size() < best->size()) best = &g;
        if (!best) {
            ++idx;
            continue;
        }
        const Tv& g = *best;
        Exps shift(p[idx].e.size());
        for (std::size_t k = 0; k < shift.size(); ++k) shift[k] = p[idx].e[k] - g[0].e[k];
        Int cg = gcd(num(p[idx].c), num(g[0].c));
        Rational a = Rational(num(g[0].c) / cg);
        if (a < 0) a = -a;
        Rational b = -a * p[idx].c / g[0].c;
        p = combine(p, idx, a, b, shift, g, o);
        scale *= a;
        scale *= strip_content(p);
    }
    if (exact && scale != 1)
        for (Term& t : p) t.c /= scale;
    return p;
}

// Head reduction only.  Tails are left alone during basis construction so a
// lex order cannot keep rewriting them upward; reduced() cleans tails at the
// end.  The result is meaningful up to a positive scalar.
Tv top_reduce_tv(Tv p, const std::vector<Tv>& basis, const Ord& o) {
    strip_content(p);
    while (!p.empty()) {
        const Tv* best = nullptr;
        for (const Tv& g : basis)
            if (!g.empty() && divides(g[0].e, p[0].e))
                if (!best || g.size() < best->size()) best = &g;
        if (!best) break;
        const Tv& g = *best;
        Exps shift(p[0].e.size());
        for (std::size_t k = 0; k < shift.size(); ++k) shift[k] = p[0].e[k] - g[0].e[k];
        Int cg = gcd(num(p[0].c), num(g[0].c));
        Rational a = Rational(num(g[0].c) / cg);
        if (a < 0) a = -a;
        Rational b = -a * p[0].c / g[0].c;
        p = combine(p, 0, a, b, shift, g, o);
        strip_content(p);
    }
    return p;
}

// lc(g)/m * x^sf * f - lc(f)/m * x^sg * g with m = gcd of the integer leads;
// stays fraction free because both inputs are integer-primitive
Tv spoly(const Tv& f, const Tv& g, const Ord& o) {
    Exps l(f[0].e.size());
    for (std::size_t k = 0; k < l.size(); ++k) l[k] = std::max(f[0].e[k], g[0].e[k]);
    Exps sf(l.size()), sg(l.size());
    for (std::size_t k = 0; k < l.size(); ++k) {
        sf[k] = l[k] - f[0].e[k];
        sg[k] = l[k] - g[0].e[k];
    }
    Int m = gcd(num(f[0].c), num(g[0].c));
    Rational a = Rational(num(g[0].c) / m);
    Tv shifted;
    shifted.reserve(f.size());
    for (const Term& t : f) shifted.push_back({exp_add(t.e, sf), t.c});
    return combine(shifted, 0, a, -(a * f[0].c) / g[0].c, sg, g, o);
}

std::uint64_t pair_key(unsigned i, unsigned j) {
    return (static_cast<std::uint64_t>(i) << 32) | j;
}

// normal selection: pairs pop in ascending lcm order under the active order
struct PairCmp {
    Ord o;
    bool operator()(const std::tuple<Exps, unsigned, unsigned>& x,
                    const std::tuple<Exps, unsigned, unsigned>& y) const {
        int c = o.cmp(std::get<0>(x), std::get<0>(y));
        if (c != 0) return c < 0;
        if (std::get<1>(x) != std::get<1>(y)) return std::get<1>(x) < std::get<1>(y);
        return std::get<2>(x) < std::get<2>(y);
    }
};

struct Engine {
    Ord o;
    std::size_t nvars = 0;
    std::vector<Tv> B;
    unsigned long long budget = 0;
    unsigned long long count = 0;
    bool trivial = false;

    std::set<std::tuple<Exps, unsigned, unsigned>, PairCmp> queue;
    std::set<std::uint64_t> done;

    explicit Engine(Ord oo) : o(oo), queue(PairCmp{oo}) {}

    void push_pairs(unsigned t) {
        for (unsigned i = 0; i < t; ++i) {
            Exps l(B[i][0].e.size());
            for (std::size_t k = 0; k < l.size(); ++k)
                l[k] = std::max(B[i][0].e[k], B[t][0].e[k]);
            queue.insert({std::move(l), i, t});
        }
    }

    void run() {
        for (const Tv& t : B)
            if (tv_is_constant(t)) trivial = true;
        if (trivial || B.empty()) return;
        for (unsigned t = 1; t < B.size(); ++t) push_pairs(t);
        while (!queue.empty()) {
            unsigned i = std::get<1>(*queue.begin());
            unsigned j = std::get<2>(*queue.begin());
            queue.erase(queue.begin());
            done.insert(pair_key(i, j));
            Exps l(B[i][0].e.size());
            bool coprime = true;
            for (std::size_t k = 0; k < l.size(); ++k) {
                l[k] = std::max(B[i][0].e[k], B[j][0].e[k]);
                if (B[i][0].e[k] > 0 && B[j][0].e[k] > 0) coprime = false;
            }
            if (coprime) continue;
            bool chained = false;
            for (unsigned k = 0; k < B.size() && !chained; ++k) {
                if (k == i || k == j || !divides(B[k][0].e, l)) continue;
                if (done.count(pair_key(std::min(i, k), std::max(i, k))) &&
                    done.count(pair_key(std::min(j, k), std::max(j, k))))
                    chained = true;
            }
            if (chained) continue;
            ++count;
            if (count > budget) throw BudgetExceeded("S-pair budget exceeded", count);
            Tv h = top_reduce_tv(spoly(B[i], B[j], o), B, o);
            if (h.empty()) continue;
            make_primitive(h);
            if (tv_is_constant(h)) {
                trivial = true;
                return;
            }
            B.push_back(std::move(h));
            push_pairs(static_cast<unsigned>(B.size()) - 1);
        }
    }

    std::vector<Tv> reduced() {
        if (trivial) return {Tv{{Exps(nvars, 0), Rational(1)}}};
        std::vector<Tv> M;
        for (std::size_t i = 0; i < B.size(); ++i) {
            bool keep = true;
            for (std::size_t j = 0; j < B.size() && keep; ++j) {
                if (j == i || !divides(B[j][0].e, B[i][0].e)) continue;
                if (B[j][0].e != B[i][0].e || j < i) keep = false;
            }
            if (keep) M.push_back(B[i]);
        }
        for (std::size_t q = 0; q < M.size(); ++q) {
            std::vector<Tv> others;
            for (std::size_t j = 0; j < M.size(); ++j)
                if (j != q) others.push_back(M[j]);
            Tv r = normal_form_tv(M[q], others, o);
            make_primitive(r);
            M[q] = std::move(r);
        }
        std::sort(M.begin(), M.end(),
                  [&](const Tv& a, const Tv& b) { return o.cmp(a[0].e, b[0].e) > 0; });
        return M;
    }
};

}  // namespace

GroebnerBasis groebner(const Ideal& I, const GroebnerOptions& opt) {
    for (const MultiPoly& g : I.gens)
        if (g.vars != I.vars) throw MathError("ideal generator over a different variable list");
    auto load = [](Engine& e, const std::vector<MultiPoly>& gens) {
        for (const MultiPoly& g : gens) {
            Tv t = to_ord(g, e.o);
            if (t.empty()) continue;
            make_primitive(t);
            e.B.push_back(std::move(t));
        }
    };
    Engine eng(Ord{opt.order});
    eng.nvars = I.vars.size();
    eng.budget = opt.spair_budget;
    if (opt.order == MonomialOrder::Lex && I.vars.size() > 1) {
        // a lex basis is cheapest to reach through a degree order: compute the
        // grevlex basis first, then rerun on it; the budget spans both runs
        Engine pre(Ord{MonomialOrder::GrevLex});
        pre.nvars = I.vars.size();
        pre.budget = opt.spair_budget;
        load(pre, I.gens);
        pre.run();
        std::vector<MultiPoly> mid;
        for (Tv& t : pre.reduced()) mid.push_back(from_ord(I.vars, std::move(t)));
        eng.count = pre.count;
        load(eng, mid);
    } else {
        load(eng, I.gens);
    }
    eng.run();

    GroebnerBasis G;
    G.vars = I.vars;
    G.order = opt.order;
    G.spairs_reduced = eng.count;
    for (Tv& t : eng.reduced()) G.polys.push_back(from_ord(I.vars, std::move(t)));
    for (const MultiPoly& g : I.gens)
        if (!normal_form(g, G).is_zero())
            throw MathError("internal: input generator does not reduce to zero");
    return G;
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& G) {
    if (p.vars != G.vars) throw MathError("normal_form over a different variable list");
    Ord o{G.order};
    std::vector<Tv> B;
    for (const MultiPoly& g : G.polys) B.push_back(to_ord(g, o));
    return from_ord(G.vars, normal_form_tv(to_ord(p, o), B, o, true));
}

bool is_trivial(const Ideal& I, unsigned long long spair_budget, unsigned long long* spairs) {
    GroebnerOptions opt;
    opt.order = MonomialOrder::GrevLex;
    opt.spair_budget = spair_budget;
    GroebnerBasis G = groebner(I, opt);
    if (spairs) *spairs = G.spairs_reduced;
    return G.polys.size() == 1 && G.polys[0].is_constant() &&
           G.polys[0].constant_value() == 1;
}

bool buchberger_criterion_holds(const GroebnerBasis& G) {
    Ord o{G.order};
    std::vector<Tv> B;
    for (const MultiPoly& g : G.polys) {
        Tv t = to_ord(g, o);
        if (!t.empty()) B.push_back(std::move(t));
    }
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = i + 1; j < B.size(); ++j)
            if (!normal_form_tv(spoly(B[i], B[j], o), B, o).empty()) return false;
    return true;
}

namespace {

// dense coefficients of `poly` in vars[k] once every deeper variable has a
// value; pre: no variable above level k occurs
std::vector<Rational> level_dense(const Tv& poly, std::size_t k, const std::vector<Rational>& vals) {
    unsigned d = 0;
    for (const Term& t : poly) d = std::max(d, t.e[k]);
    std::vector<Rational> c(d + 1, Rational(0));
    for (const Term& t : poly) {
        Rational v = t.c;
        for (std::size_t j = k + 1; j < t.e.size(); ++j)
            for (unsigned x = 0; x < t.e[j]; ++x) v *= vals[j];
        c[t.e[k]] += v;
    }
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    return c;
}

}  // namespace

SolutionSet rational_solutions(const Ideal& I, unsigned long long spair_budget) {
    if (I.vars.empty()) throw MathError("rational_solutions over an empty variable list");
    GroebnerOptions opt;
    opt.order = MonomialOrder::Lex;
    opt.spair_budget = spair_budget;
    GroebnerBasis G = groebner(I, opt);

    SolutionSet out;
    out.spairs_reduced = G.spairs_reduced;
    if (G.polys.size() == 1 && G.polys[0].is_constant()) return out;  // empty variety

    Ord o{MonomialOrder::Lex};
    std::vector<Tv> B;
    for (const MultiPoly& g : G.polys) B.push_back(to_ord(g, o));

    const std::size_t n = I.vars.size();
    for (std::size_t v = 0; v < n; ++v) {
        bool pure = false;
        for (const Tv& t : B) {
            const Exps& e = t[0].e;
            bool ok = e[v] > 0;
            for (std::size_t j = 0; j < n && ok; ++j)
                if (j != v && e[j] > 0) ok = false;
            if (ok) {
                pure = true;
                break;
            }
        }
        if (!pure)
            throw MathError("ideal is not zero-dimensional: no pure power of '" + I.vars[v] +
                            "' among the lead terms");
    }

    // basis elements grouped by the highest variable they involve
    std::vector<std::vector<const Tv*>> level(n);
    for (const Tv& t : B) {
        std::size_t mn = n;
        for (const Term& term : t)
            for (std::size_t j = 0; j < n; ++j)
                if (term.e[j] > 0) mn = std::min(mn, j);
        if (mn < n) level[mn].push_back(&t);
    }

    std::vector<Rational> vals(n);

    auto record = [&](const std::vector<Rational>& v) {
        PlanePoint pt;
        for (std::size_t i = 0; i < n; ++i) pt[I.vars[i]] = v[i];
        for (const MultiPoly& g : I.gens)
            if (evaluate(g, pt) != 0)
                throw MathError("internal: candidate point fails an input generator");
        out.points.push_back(std::move(pt));
    };

    auto descend = [&](auto&& self, std::size_t k) -> void {
        if (k == static_cast<std::size_t>(-1)) {
            record(vals);
            return;
        }
        std::vector<Rational> g{Rational(0)};
        bool any = false;
        for (const Tv* p : level[k]) {
            auto c = level_dense(*p, k, vals);
            if (c.size() == 1 && c[0] == 0) continue;
            g = any ? gcd_dense(std::move(g), std::move(c)) : std::move(c);
            any = true;
        }
        if (!any || g.empty()) throw MathError("internal: unconstrained variable in back substitution");
        if (g.size() == 1) return;  // nonzero constant, inconsistent branch
        RationalRoots rr = rational_roots_dense(g);
        if (rr.cofactor_degree > 0) {
            out.complete_over_C = false;
            out.residual.push_back({I.vars[k], rr.cofactor_degree});
        }
        for (const auto& rm : rr.roots) {
            vals[k] = rm.first;
            self(self, k - 1);
        }
    };
    descend(descend, n - 1);

    std::sort(out.points.begin(), out.points.end(), [&](const PlanePoint& a, const PlanePoint& b) {
        for (const auto& v : I.vars) {
            const Rational& x = a.at(v);
            const Rational& y = b.at(v);
            if (x != y) return x < y;
        }
        return false;
    });
    return out;
}

}  // namespace trico
