#include "trico/multipoly.hpp"

#include "trico/univariate.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace trico {

int grlex_cmp(const Exps& a, const Exps& b) {
    unsigned long da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

namespace {

struct GrlexGreater {
    bool operator()(const Exps& a, const Exps& b) const { return grlex_cmp(a, b) > 0; }
};

void check_same_vars(const MultiPoly& p, const MultiPoly& q) {
    if (p.vars != q.vars)
        throw MathError("polynomial arithmetic over different variable lists");
}

MultiPoly from_map(std::vector<std::string> vars, std::map<Exps, Rational, GrlexGreater>& m) {
    MultiPoly r;
    r.vars = std::move(vars);
    for (auto& [e, c] : m)
        if (c != 0) r.terms.push_back({e, c});
    return r;
}

unsigned exp_sum(const Exps& e) {
    unsigned long s = 0;
    for (unsigned x : e) s += x;
    return static_cast<unsigned>(s);
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

}  // namespace

bool MultiPoly::is_constant() const {
    return terms.empty() || (terms.size() == 1 && exp_sum(terms[0].e) == 0);
}

Rational MultiPoly::constant_value() const {
    if (terms.empty()) return 0;
    if (!is_constant()) throw MathError("constant_value on non-constant polynomial");
    return terms[0].c;
}

MultiPoly poly_zero(std::vector<std::string> vars) {
    MultiPoly p;
    p.vars = std::move(vars);
    return p;
}

MultiPoly poly_const(std::vector<std::string> vars, const Rational& c) {
    MultiPoly p;
    p.vars = std::move(vars);
    if (c != 0) p.terms.push_back({Exps(p.vars.size(), 0), c});
    return p;
}

MultiPoly poly_var(const std::vector<std::string>& vars, const std::string& name) {
    Exps e(vars.size(), 0);
    e[var_index(vars, name)] = 1;
    return poly_monomial(vars, std::move(e), 1);
}

MultiPoly poly_monomial(std::vector<std::string> vars, Exps e, const Rational& c) {
    MultiPoly p;
    p.vars = std::move(vars);
    if (e.size() != p.vars.size()) throw MathError("monomial exponent arity mismatch");
    if (c != 0) p.terms.push_back({std::move(e), c});
    return p;
}

std::size_t var_index(const std::vector<std::string>& vars, const std::string& name) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return i;
    throw MathError("undeclared variable '" + name + "'");
}

MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
    check_same_vars(p, q);
    MultiPoly r;
    r.vars = p.vars;
    r.terms.reserve(p.terms.size() + q.terms.size());
    std::size_t i = 0, j = 0;
    while (i < p.terms.size() && j < q.terms.size()) {
        int c = grlex_cmp(p.terms[i].e, q.terms[j].e);
        if (c > 0) {
            r.terms.push_back(p.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(q.terms[j++]);
        } else {
            Rational s = p.terms[i].c + q.terms[j].c;
            if (s != 0) r.terms.push_back({p.terms[i].e, s});
            ++i, ++j;
        }
    }
    for (; i < p.terms.size(); ++i) r.terms.push_back(p.terms[i]);
    for (; j < q.terms.size(); ++j) r.terms.push_back(q.terms[j]);
    return r;
}

MultiPoly operator-(const MultiPoly& p) {
    MultiPoly r = p;
    for (auto& t : r.terms) t.c = -t.c;
    return r;
}

MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) { return p + (-q); }

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    check_same_vars(p, q);
    std::map<Exps, Rational, GrlexGreater> acc;
    for (const auto& a : p.terms)
        for (const auto& b : q.terms)
            acc[exp_add(a.e, b.e)] += a.c * b.c;
    return from_map(p.vars, acc);
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    if (c == 0) return poly_zero(p.vars);
    MultiPoly r = p;
    for (auto& t : r.terms) t.c *= c;
    return r;
}

bool operator==(const MultiPoly& p, const MultiPoly& q) {
    if (p.vars != q.vars || p.terms.size() != q.terms.size()) return false;
    for (std::size_t i = 0; i < p.terms.size(); ++i)
        if (p.terms[i].e != q.terms[i].e || p.terms[i].c != q.terms[i].c) return false;
    return true;
}

MultiPoly pow(const MultiPoly& p, unsigned k) {
    MultiPoly r = poly_const(p.vars, 1);
    MultiPoly base = p;
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

unsigned total_degree(const MultiPoly& p) {
    unsigned d = 0;
    for (const auto& t : p.terms) d = std::max(d, exp_sum(t.e));
    return d;
}

unsigned deg_in(const MultiPoly& p, const std::string& var) {
    std::size_t i = var_index(p.vars, var);
    unsigned d = 0;
    for (const auto& t : p.terms) d = std::max(d, t.e[i]);
    return d;
}

MultiPoly coeff_in(const MultiPoly& p, const std::string& var, unsigned k) {
    std::size_t i = var_index(p.vars, var);
    std::map<Exps, Rational, GrlexGreater> acc;
    for (const auto& t : p.terms)
        if (t.e[i] == k) {
            Exps e = t.e;
            e[i] = 0;
            acc[e] += t.c;
        }
    return from_map(p.vars, acc);
}

MultiPoly differentiate(const MultiPoly& p, const std::string& var) {
    std::size_t i = var_index(p.vars, var);
    MultiPoly r;
    r.vars = p.vars;
    for (const auto& t : p.terms)
        if (t.e[i] > 0) {
            Exps e = t.e;
            e[i] -= 1;
            r.terms.push_back({std::move(e), t.c * t.e[i]});
        }
    // dropping terms keeps the grlex-descending invariant only within each
    // degree block; re-sort to be safe
    std::sort(r.terms.begin(), r.terms.end(),
              [](const Term& a, const Term& b) { return grlex_cmp(a.e, b.e) > 0; });
    return r;
}

Rational evaluate(const MultiPoly& p, const PlanePoint& at) {
    std::vector<Rational> vals(p.vars.size());
    for (std::size_t i = 0; i < p.vars.size(); ++i) {
        auto it = at.find(p.vars[i]);
        if (it == at.end()) throw MathError("evaluate: variable '" + p.vars[i] + "' unassigned");
        vals[i] = it->second;
    }
    Rational sum = 0;
    for (const auto& t : p.terms) {
        Rational m = t.c;
        for (std::size_t i = 0; i < vals.size(); ++i)
            for (unsigned k = 0; k < t.e[i]; ++k) m *= vals[i];
        sum += m;
    }
    return sum;
}

MultiPoly substitute(const MultiPoly& p, const std::string& var, const MultiPoly& value) {
    check_same_vars(p, value);
    unsigned d = deg_in(p, var);
    // Horner in var
    MultiPoly r = coeff_in(p, var, d);
    for (unsigned k = d; k-- > 0;)
        r = r * value + coeff_in(p, var, k);
    return r;
}

MultiPoly embed(const MultiPoly& p, std::vector<std::string> vars) {
    std::vector<std::size_t> where(p.vars.size(), vars.size());
    for (std::size_t i = 0; i < p.vars.size(); ++i)
        for (std::size_t j = 0; j < vars.size(); ++j)
            if (vars[j] == p.vars[i]) where[i] = j;
    MultiPoly r;
    r.vars = std::move(vars);
    for (const auto& t : p.terms) {
        Exps e(r.vars.size(), 0);
        for (std::size_t i = 0; i < p.vars.size(); ++i) {
            if (t.e[i] == 0) continue;
            if (where[i] == r.vars.size())
                throw MathError("embed: variable '" + p.vars[i] + "' missing from the target list");
            e[where[i]] = t.e[i];
        }
        r.terms.push_back({std::move(e), t.c});
    }
    std::sort(r.terms.begin(), r.terms.end(),
              [](const Term& a, const Term& b) { return grlex_cmp(a.e, b.e) > 0; });
    return r;
}

MultiPoly translate(const MultiPoly& p, const PlanePoint& at) {
    MultiPoly r = p;
    for (const auto& [name, a] : at) {
        if (a == 0) continue;
        MultiPoly shifted = poly_var(r.vars, name) + poly_const(r.vars, a);
        r = substitute(r, name, shifted);
    }
    return r;
}

unsigned multiplicity_at(const MultiPoly& p, const PlanePoint& at) {
    if (p.is_zero()) throw MathError("multiplicity_at on the zero polynomial");
    MultiPoly q = translate(p, at);
    unsigned m = 0xffffffffu;
    for (const auto& t : q.terms) m = std::min(m, exp_sum(t.e));
    return m;
}

MultiPoly lowest_form(const MultiPoly& p, const PlanePoint& at) {
    if (p.is_zero()) throw MathError("lowest_form on the zero polynomial");
    MultiPoly q = translate(p, at);
    unsigned m = 0xffffffffu;
    for (const auto& t : q.terms) m = std::min(m, exp_sum(t.e));
    MultiPoly r;
    r.vars = q.vars;
    for (const auto& t : q.terms)
        if (exp_sum(t.e) == m) r.terms.push_back(t);
    return r;
}

bool binary_form_squarefree(const MultiPoly& form) {
    if (form.is_zero()) throw MathError("binary_form_squarefree on the zero form");
    if (form.vars.size() != 2)
        throw MathError("binary_form_squarefree expects exactly two variables");
    unsigned d = total_degree(form);
    for (const auto& t : form.terms)
        if (t.e[0] + t.e[1] != d) throw MathError("binary_form_squarefree on inhomogeneous input");
    if (d <= 1) return true;
    // dehomogenize at second variable = 1; the drop in degree is the
    // multiplicity of the root at infinity
    std::vector<Rational> f(d + 1, Rational(0));
    for (const auto& t : form.terms) f[t.e[0]] += t.c;
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    unsigned inf_mult = d - static_cast<unsigned>(f.size() - 1);
    if (inf_mult >= 2) return false;
    std::vector<Rational> fp(f.size() > 1 ? f.size() - 1 : 1, Rational(0));
    for (std::size_t k = 1; k < f.size(); ++k) fp[k - 1] = f[k] * Rational(static_cast<long>(k));
    auto g = gcd_dense(f, fp);
    return g.size() <= 1;
}

MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q) {
    check_same_vars(p, q);
    if (q.is_zero()) throw MathError("divide_exact by zero");
    MultiPoly rem = p;
    MultiPoly quot = poly_zero(p.vars);
    const Term& qlt = q.terms.front();
    while (!rem.is_zero()) {
        const Term& rlt = rem.terms.front();
        Exps delta(rlt.e.size());
        for (std::size_t i = 0; i < delta.size(); ++i) {
            if (rlt.e[i] < qlt.e[i]) throw MathError("divide_exact: not divisible");
            delta[i] = rlt.e[i] - qlt.e[i];
        }
        MultiPoly m = poly_monomial(p.vars, std::move(delta), rlt.c / qlt.c);
        quot = quot + m;
        rem = rem - m * q;
    }
    return quot;
}

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms) {
        Rational a = t.c;
        if (a < 0) {
            os << "-";
            a = -a;
        } else if (!first) {
            os << "+";
        }
        first = false;
        bool any_var = exp_sum(t.e) > 0;
        if (!any_var) {
            os << to_string(a);
            continue;
        }
        bool printed = false;
        if (a != 1) {
            os << to_string(a);
            printed = true;
        }
        for (std::size_t i = 0; i < p.vars.size(); ++i) {
            if (t.e[i] == 0) continue;
            if (printed) os << "*";
            os << p.vars[i];
            if (t.e[i] > 1) os << "^" << t.e[i];
            printed = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << to_string(p); }

namespace {

struct Parser {
    const std::string& text;
    std::vector<std::string> vars;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Int(text.substr(start, pos - start));
    }

    unsigned exponent() {
        Int e = integer();
        if (e > 0x7fffffff) fail("exponent too large");
        return static_cast<unsigned>(e.convert_to<unsigned long>());
    }

    MultiPoly base() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            MultiPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = integer();
            if (eat('/')) {
                Int d = integer();
                if (d == 0) fail("zero denominator");
                return poly_const(vars, Rational(n, d));
            }
            return poly_const(vars, Rational(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            for (const auto& v : vars)
                if (v == name) return poly_var(vars, name);
            pos = start;
            fail("undeclared variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    MultiPoly factor() {
        MultiPoly b = base();
        if (eat('^')) return trico::pow(b, exponent());
        return b;
    }

    MultiPoly term() {
        MultiPoly r = factor();
        while (eat('*')) r = r * factor();
        return r;
    }

    MultiPoly expr() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        MultiPoly r = term();
        if (neg) r = -r;
        while (true) {
            if (eat('+')) {
                r = r + term();
            } else if (eat('-')) {
                r = r - term();
            } else {
                break;
            }
        }
        return r;
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, std::vector<std::string> vars) {
    Parser p{text, std::move(vars)};
    p.skip_ws();
    if (p.pos >= text.size()) throw ParseError("empty polynomial text", 0);
    MultiPoly r = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
    return r;
}

}  // namespace trico
