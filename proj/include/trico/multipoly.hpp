#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace trico {

// exponent vector, one entry per declared variable
using Exps = std::vector<unsigned>;

// point with named rational coordinates
using PlanePoint = std::map<std::string, Rational>;

struct Term {
    Exps e;
    Rational c;
};

// graded lex: higher total degree wins, ties broken lexicographically in
// declared variable order.  Returns <0, 0, >0 like strcmp.
int grlex_cmp(const Exps& a, const Exps& b);

// Sparse polynomial over Q.  Terms are kept grlex-descending with no zero
// coefficients; that order is also the canonical print order, so equal
// values always print identically.
struct MultiPoly {
    std::vector<std::string> vars;
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // 0 for the zero polynomial
};

MultiPoly poly_zero(std::vector<std::string> vars);
MultiPoly poly_const(std::vector<std::string> vars, const Rational& c);
MultiPoly poly_var(const std::vector<std::string>& vars, const std::string& name);
MultiPoly poly_monomial(std::vector<std::string> vars, Exps e, const Rational& c);

std::size_t var_index(const std::vector<std::string>& vars, const std::string& name);

MultiPoly operator+(const MultiPoly& p, const MultiPoly& q);
MultiPoly operator-(const MultiPoly& p, const MultiPoly& q);
MultiPoly operator-(const MultiPoly& p);
MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
MultiPoly operator*(const Rational& c, const MultiPoly& p);
bool operator==(const MultiPoly& p, const MultiPoly& q);
inline bool operator!=(const MultiPoly& p, const MultiPoly& q) { return !(p == q); }

MultiPoly pow(const MultiPoly& p, unsigned k);

unsigned total_degree(const MultiPoly& p);       // 0 for the zero polynomial
unsigned deg_in(const MultiPoly& p, const std::string& var);
MultiPoly coeff_in(const MultiPoly& p, const std::string& var, unsigned k);

MultiPoly differentiate(const MultiPoly& p, const std::string& var);

// every variable of p must be assigned
Rational evaluate(const MultiPoly& p, const PlanePoint& at);

// substitute one variable by a polynomial over the same variable list
MultiPoly substitute(const MultiPoly& p, const std::string& var, const MultiPoly& value);

// the same polynomial over another variable list; every variable that
// actually occurs must be present in the target list
MultiPoly embed(const MultiPoly& p, std::vector<std::string> vars);

// x -> x + at[x] for every variable assigned in `at`
MultiPoly translate(const MultiPoly& p, const PlanePoint& at);

// vanishing order at a point: 0 if p(at) != 0, total degree of the lowest
// nonzero jet otherwise; error on the zero polynomial
unsigned multiplicity_at(const MultiPoly& p, const PlanePoint& at);

// the tangent-cone form: terms of minimal total degree after moving `at`
// to the origin (variables keep their names, now local coordinates)
MultiPoly lowest_form(const MultiPoly& p, const PlanePoint& at);

// pre: nonzero homogeneous form in two declared variables.  gcd test on the
// dehomogenization plus the multiplicity of the root at infinity.
bool binary_form_squarefree(const MultiPoly& form);

// exact quotient p / q; throws MathError if the division leaves a remainder
MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q);

std::string to_string(const MultiPoly& p);
std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// Grammar: sums/differences of products of powers; integer (or n/m rational)
// literals, declared variable names, parentheses, ^ with nonnegative integer
// exponents.  Throws ParseError with the offending position.
MultiPoly parse_poly(const std::string& text, std::vector<std::string> vars);

}  // namespace trico
