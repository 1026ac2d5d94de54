#pragma once

#include "multipoly.hpp"

namespace trico {

// Divisor class a*S + b*R on the Hirzebruch surface of invariant 3, where
// S is the section with S^2 = -3 and R a ruling fibre.
struct DivisorClass {
    long long a = 0;
    long long b = 0;
};

inline bool operator==(DivisorClass x, DivisorClass y) { return x.a == y.a && x.b == y.b; }
inline bool operator!=(DivisorClass x, DivisorClass y) { return !(x == y); }
inline DivisorClass operator+(DivisorClass x, DivisorClass y) { return {x.a + y.a, x.b + y.b}; }
inline DivisorClass operator-(DivisorClass x, DivisorClass y) { return {x.a - y.a, x.b - y.b}; }
inline DivisorClass operator*(long long n, DivisorClass x) { return {n * x.a, n * x.b}; }

long long intersect(DivisorClass x, DivisorClass y);

DivisorClass canonical_class();      // -2S - 5R
DivisorClass negative_section();     // S
DivisorClass ruling();               // R
DivisorClass positive_section();     // S + 3R, self-intersection +3

long long h0(DivisorClass d);

// monomial basis t^k * u^j, 0 <= j <= a, 0 <= k <= b - 3j, listed with j
// ascending and k ascending inside each j
std::vector<MultiPoly> basis(DivisorClass d);

// Affine charts covering the complement of the negative section: V0 with
// coordinates (t, u) and V1 with (s, v), glued by t = 1/s, u = v/s^3.
enum class Chart { V0, V1 };

std::vector<std::string> chart_vars(Chart c);

struct Section {
    DivisorClass cls;
    Chart chart = Chart::V0;
    MultiPoly poly;
};

// throws ValidationError unless every monomial fits inside the class
void validate_section(const Section& s);

// rewrite into the other chart: t^k u^j <-> s^(b-3j-k) v^j termwise
Section transition(const Section& s);

}  // namespace trico
