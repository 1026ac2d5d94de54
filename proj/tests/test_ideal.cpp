#include "doctest.h"

#include "trico/groebner.hpp"

#include <random>

using namespace trico;

namespace {

const std::vector<std::string> xy{"x", "y"};

Ideal I(std::vector<std::string> vars, std::vector<std::string> gens) {
    Ideal out;
    out.vars = vars;
    for (const auto& g : gens) out.gens.push_back(parse_poly(g, vars));
    return out;
}

}  // namespace

TEST_SUITE("idealsolver") {

TEST_CASE("groebner basis of simple ideals") {
    GroebnerBasis G = groebner(I(xy, {"x^2+y^2-1", "x-y"}));
    REQUIRE(G.polys.size() == 2);
    CHECK(G.polys[0] == parse_poly("x-y", xy));
    CHECK(G.polys[1] == parse_poly("2*y^2-1", xy));

    GroebnerBasis P = groebner(I(xy, {"6*x^2-6*x", "4*x^2-4*x"}));
    REQUIRE(P.polys.size() == 1);
    CHECK(P.polys[0] == parse_poly("x^2-x", xy));
}

TEST_CASE("reduced basis is primitive with positive leading coefficient") {
    GroebnerBasis G = groebner(I(xy, {"-2*x^2+4*y", "-3*y^2+6*x"}));
    for (const auto& g : G.polys) {
        Int c_gcd = 0;
        for (const auto& t : g.terms) {
            CHECK(is_integer(t.c));
            c_gcd = gcd(c_gcd, num(t.c));
        }
        CHECK(c_gcd == 1);
    }
}

TEST_CASE("basis elements generate and reduce the inputs to zero") {
    Ideal ideal = I(xy, {"x^3-2*x*y", "x^2*y-2*y^2+x"});
    GroebnerBasis G = groebner(ideal);
    for (const auto& g : ideal.gens) CHECK(normal_form(g, G).is_zero());
    CHECK(buchberger_criterion_holds(G));
}

TEST_CASE("buchberger criterion rejects a non basis") {
    GroebnerBasis fake;
    fake.vars = xy;
    fake.order = MonomialOrder::Lex;
    fake.polys = {parse_poly("x^2", xy), parse_poly("x*y-1", xy)};
    CHECK(!buchberger_criterion_holds(fake));
}

TEST_CASE("lex order eliminates") {
    GroebnerBasis G = groebner(I({"x", "y"}, {"x^2+y^2-5", "x*y-2"}));
    bool has_pure_y = false;
    for (const auto& g : G.polys) has_pure_y = has_pure_y || deg_in(g, "x") == 0;
    CHECK(has_pure_y);
}

TEST_CASE("triviality detection") {
    CHECK(is_trivial(I(xy, {"x-1", "x+1"})));
    CHECK(is_trivial(I(xy, {"x^2+y^2", "x*y-1", "x+y"})));
    CHECK(!is_trivial(I(xy, {"x^2+1"})));
    CHECK(!is_trivial(I(xy, {"x-y"})));
    unsigned long long used = 0;
    CHECK(is_trivial(I(xy, {"x^2", "y^2", "x+y-1"}), 100000, &used));
    CHECK(used > 0);
}

TEST_CASE("budget cap throws") {
    Ideal hard = I({"x", "y", "z"},
                   {"x^2+y^2+z^2-4", "x*y+y*z+z*x-1", "x^3*y-z^2+x-2*y^3*z"});
    CHECK_THROWS_AS(groebner(hard, {MonomialOrder::Lex, 2}), BudgetExceeded);
    try {
        groebner(hard, {MonomialOrder::Lex, 2});
    } catch (const BudgetExceeded& e) {
        CHECK(e.spairs == 3);
    }
}

TEST_CASE("rational solutions of a split system") {
    SolutionSet sol = rational_solutions(I(xy, {"x^2-1", "y-x"}));
    REQUIRE(sol.points.size() == 2);
    CHECK(sol.complete_over_C);
    CHECK(sol.points[0].at("x") == Rational(-1));
    CHECK(sol.points[0].at("y") == Rational(-1));
    CHECK(sol.points[1].at("x") == Rational(1));
    CHECK(sol.points[1].at("y") == Rational(1));
}

TEST_CASE("solver flags irrational leftovers") {
    SolutionSet sol = rational_solutions(I(xy, {"(x^2-2)*(x-1)", "y-1"}));
    REQUIRE(sol.points.size() == 1);
    CHECK(sol.points[0].at("x") == Rational(1));
    CHECK(!sol.complete_over_C);
    REQUIRE(sol.residual.size() == 1);
    CHECK(sol.residual[0].first == "x");
    CHECK(sol.residual[0].second == 2);

    SolutionSet none = rational_solutions(I(xy, {"x^2-2", "y"}));
    CHECK(none.points.empty());
    CHECK(!none.complete_over_C);
}

TEST_CASE("solver rejects positive dimensional systems") {
    CHECK_THROWS_AS(rational_solutions(I(xy, {"x*y"})), MathError);
    CHECK_THROWS_AS(rational_solutions(I(xy, {"x-y"})), MathError);
}

TEST_CASE("empty variety comes back empty but complete") {
    SolutionSet sol = rational_solutions(I(xy, {"x-1", "x-2", "y"}));
    CHECK(sol.points.empty());
    CHECK(sol.complete_over_C);
}

TEST_CASE("solver exactness on constructed grids") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> val(-4, 4);
    std::uniform_int_distribution<int> count(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> xs, ys;
        for (int k = count(rng); k > 0; --k) {
            Rational v(val(rng), 1 + (trial % 2));
            bool seen = false;
            for (const auto& w : xs) seen = seen || w == v;
            if (!seen) xs.push_back(v);
        }
        for (int k = count(rng); k > 0; --k) {
            Rational v(val(rng));
            bool seen = false;
            for (const auto& w : ys) seen = seen || w == v;
            if (!seen) ys.push_back(v);
        }
        MultiPoly fx = poly_const(xy, 1), fy = poly_const(xy, 1);
        MultiPoly x = poly_var(xy, "x"), y = poly_var(xy, "y");
        for (const auto& v : xs) fx = fx * (x - poly_const(xy, v));
        for (const auto& v : ys) fy = fy * (y - poly_const(xy, v));
        SolutionSet sol = rational_solutions(Ideal{xy, {fx, fy}});
        CHECK(sol.complete_over_C);
        REQUIRE(sol.points.size() == xs.size() * ys.size());
        for (const auto& pt : sol.points) {
            bool in_x = false, in_y = false;
            for (const auto& v : xs) in_x = in_x || v == pt.at("x");
            for (const auto& v : ys) in_y = in_y || v == pt.at("y");
            CHECK(in_x);
            CHECK(in_y);
        }
    }
}

TEST_CASE("three variable elimination") {
    std::vector<std::string> zyx{"z", "y", "x"};
    SolutionSet sol = rational_solutions(
        I(zyx, {"z-x-y", "y^2-x", "x^2-x"}));
    REQUIRE(sol.points.size() == 3);
    CHECK(sol.complete_over_C);
    // points sorted by (z, y, x)
    CHECK(sol.points[0].at("z") == Rational(0));
    CHECK(sol.points[0].at("y") == Rational(-1));
    CHECK(sol.points[1].at("z") == Rational(0));
    CHECK(sol.points[1].at("y") == Rational(0));
    CHECK(sol.points[2].at("z") == Rational(2));
    CHECK(sol.points[2].at("y") == Rational(1));
}

}  // TEST_SUITE
