#include "trico/f3.hpp"

#include <algorithm>

namespace trico {

long long intersect(DivisorClass x, DivisorClass y) {
    return -3 * x.a * y.a + x.a * y.b + x.b * y.a;
}

DivisorClass canonical_class() { return {-2, -5}; }
DivisorClass negative_section() { return {1, 0}; }
DivisorClass ruling() { return {0, 1}; }
DivisorClass positive_section() { return {1, 3}; }

long long h0(DivisorClass d) {
    if (d.a < 0 || d.b < 0) return 0;
    long long total = 0;
    for (long long j = 0; j <= std::min(d.a, d.b / 3); ++j) total += d.b - 3 * j + 1;
    return total;
}

std::vector<MultiPoly> basis(DivisorClass d) {
    std::vector<MultiPoly> out;
    if (d.a < 0 || d.b < 0) return out;
    const std::vector<std::string> vars = chart_vars(Chart::V0);
    for (long long j = 0; j <= std::min(d.a, d.b / 3); ++j)
        for (long long k = 0; k <= d.b - 3 * j; ++k)
            out.push_back(poly_monomial(vars, {static_cast<unsigned>(k), static_cast<unsigned>(j)}, 1));
    return out;
}

std::vector<std::string> chart_vars(Chart c) {
    return c == Chart::V0 ? std::vector<std::string>{"t", "u"} : std::vector<std::string>{"s", "v"};
}

void validate_section(const Section& s) {
    if (s.poly.vars != chart_vars(s.chart))
        throw ValidationError("section polynomial uses the wrong chart coordinates");
    for (const Term& t : s.poly.terms) {
        long long k = t.e[0], j = t.e[1];
        if (j <= s.cls.a && k <= s.cls.b - 3 * j) continue;
        throw ValidationError("monomial " + to_string(MultiPoly{s.poly.vars, {{t.e, Rational(1)}}}) +
                              " does not lie in H0(" + std::to_string(s.cls.a) + "S+" +
                              std::to_string(s.cls.b) + "R)");
    }
}

Section transition(const Section& s) {
    validate_section(s);
    Section out;
    out.cls = s.cls;
    out.chart = s.chart == Chart::V0 ? Chart::V1 : Chart::V0;
    out.poly.vars = chart_vars(out.chart);
    for (const Term& t : s.poly.terms) {
        long long k = t.e[0], j = t.e[1];
        out.poly.terms.push_back(
            {{static_cast<unsigned>(s.cls.b - 3 * j - k), static_cast<unsigned>(j)}, t.c});
    }
    std::sort(out.poly.terms.begin(), out.poly.terms.end(),
              [](const Term& x, const Term& y) { return grlex_cmp(x.e, y.e) > 0; });
    return out;
}

}  // namespace trico
