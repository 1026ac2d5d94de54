#pragma once

#include "multipoly.hpp"

namespace trico {

// Resultant of f and g with respect to `var`, the other variables staying
// symbolic: raw determinant of the Sylvester matrix with f's coefficient
// rows on top.  With this layout Res_z(z-a, z-b) = a-b and
// Res_z(z^3+r*z+s, 3*z^2+r) = 4*r^3+27*s^2.
MultiPoly resultant_in(const MultiPoly& f, const MultiPoly& g, const std::string& var);

struct RationalRoots {
    std::vector<std::pair<Rational, unsigned>> roots;  // ascending, with multiplicities
    unsigned cofactor_degree = 0;  // degree left after removing all rational roots
};

// pre: nonzero and univariate in `var`
RationalRoots univariate_rational_roots(const MultiPoly& p, const std::string& var);

// dense layout (constant term first) used by the solver's back-substitution
RationalRoots rational_roots_dense(std::vector<Rational> f);
std::vector<Rational> gcd_dense(std::vector<Rational> a, std::vector<Rational> b);

}  // namespace trico
