#pragma once

#include "multipoly.hpp"

#include <utility>

namespace trico {

enum class MonomialOrder { Lex, GrevLex };

// Generators over a shared variable list.  The list order is the
// elimination priority: the first variable is the largest.
struct Ideal {
    std::vector<std::string> vars;
    std::vector<MultiPoly> gens;
};

struct GroebnerOptions {
    MonomialOrder order = MonomialOrder::Lex;
    unsigned long long spair_budget = 100000;
};

// Reduced basis: integer-primitive elements with positive leading
// coefficient, listed by leading monomial descending.  Term storage inside
// each element stays in the library-wide canonical print order.
struct GroebnerBasis {
    std::vector<std::string> vars;
    MonomialOrder order = MonomialOrder::Lex;
    std::vector<MultiPoly> polys;
    unsigned long long spairs_reduced = 0;
};

// Buchberger with the product and chain criteria.  Only S-pairs that
// actually get reduced count against the budget; throws BudgetExceeded
// past the cap.
GroebnerBasis groebner(const Ideal& I, const GroebnerOptions& opt = {});

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& G);

// whether 1 lies in the ideal; runs grevlex internally since the answer
// does not depend on the order and grevlex is usually far cheaper
bool is_trivial(const Ideal& I, unsigned long long spair_budget = 100000,
                unsigned long long* spairs = nullptr);

// test hook: every S-polynomial of G reduces to zero modulo G
bool buchberger_criterion_holds(const GroebnerBasis& G);

struct SolutionSet {
    std::vector<PlanePoint> points;  // sorted by coordinates in variable order
    bool complete_over_C = true;     // false when irrational algebraic points remain
    std::vector<std::pair<std::string, unsigned>> residual;  // variable, leftover degree
    unsigned long long spairs_reduced = 0;
};

// All rational points of the vanishing set, by lex Groebner basis and
// back substitution.  Requires a zero-dimensional ideal; every returned
// point is re-verified against the input generators.
SolutionSet rational_solutions(const Ideal& I, unsigned long long spair_budget = 100000);

}  // namespace trico
