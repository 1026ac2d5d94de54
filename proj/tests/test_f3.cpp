#include "doctest.h"

#include "trico/f3.hpp"

#include <random>

using namespace trico;

TEST_SUITE("f3geom") {

TEST_CASE("intersection numbers") {
    DivisorClass S = negative_section(), R = ruling(), K = canonical_class();
    CHECK(intersect(S, S) == -3);
    CHECK(intersect(S, R) == 1);
    CHECK(intersect(R, R) == 0);
    CHECK(intersect(K, K) == 8);
    DivisorClass s0 = positive_section();
    CHECK(intersect(s0, s0) == 3);
    CHECK(intersect(s0, S) == 0);
    // adjunction: both sections and the ruling are rational
    CHECK(intersect(S, S + K) == -2);
    CHECK(intersect(s0, s0 + K) == -2);
    CHECK(intersect(R, R + K) == -2);
}

TEST_CASE("divisor class arithmetic") {
    DivisorClass L1{2, 4}, L2{3, 8};
    CHECK(2 * (L1 + L2) == DivisorClass{10, 24});
    CHECK(2 * (L1 + L2) == 2 * negative_section() + 8 * positive_section());
    CHECK(L2 - L1 == DivisorClass{1, 4});
}

TEST_CASE("section space dimensions") {
    CHECK(h0({4, 8}) == 18);
    CHECK(h0({2, 4}) == 7);
    CHECK(h0({1, 3}) == 5);
    CHECK(h0({1, 4}) == 7);
    CHECK(h0({2, 5}) == 9);
    CHECK(h0({6, 15}) == 51);
    CHECK(h0({0, 0}) == 1);
    CHECK(h0({-1, 3}) == 0);
    CHECK(h0({2, -1}) == 0);
    // twisting down by the negative section costs nothing until b/3 bites
    CHECK(h0({5, 6}) == h0({2, 6}));
}

TEST_CASE("monomial basis agrees with h0 and passes validation") {
    for (long long a = 0; a <= 5; ++a) {
        for (long long b = 0; b <= 12; ++b) {
            DivisorClass d{a, b};
            auto mons = basis(d);
            CHECK(mons.size() == static_cast<std::size_t>(h0(d)));
            for (const auto& m : mons) validate_section(Section{d, Chart::V0, m});
        }
    }
}

TEST_CASE("basis order is by fibre degree then base degree") {
    auto mons = basis({1, 3});
    REQUIRE(mons.size() == 5);
    std::vector<std::string> expect{"1", "t", "t^2", "t^3", "u"};
    for (std::size_t i = 0; i < mons.size(); ++i) CHECK(to_string(mons[i]) == expect[i]);
}

TEST_CASE("section validation rejects monomials outside the class") {
    std::vector<std::string> tu{"t", "u"};
    CHECK_THROWS_AS(validate_section(Section{{2, 5}, Chart::V0, parse_poly("u^3", tu)}),
                    ValidationError);
    CHECK_THROWS_AS(validate_section(Section{{1, 5}, Chart::V0, parse_poly("t^6", tu)}),
                    ValidationError);
    CHECK_THROWS_AS(validate_section(Section{{2, 5}, Chart::V0, parse_poly("t^3*u", tu)}),
                    ValidationError);
    // u^2 needs b - 3j >= 0, so it lives in (2,6) but not (2,5)
    CHECK_THROWS_AS(validate_section(Section{{2, 5}, Chart::V0, parse_poly("u^2", tu)}),
                    ValidationError);
    validate_section(Section{{2, 5}, Chart::V0, parse_poly("t^2*u+t^5-5", tu)});
    validate_section(Section{{2, 6}, Chart::V0, parse_poly("u^2", tu)});
}

TEST_CASE("chart coordinates") {
    CHECK(chart_vars(Chart::V0) == std::vector<std::string>{"t", "u"});
    CHECK(chart_vars(Chart::V1) == std::vector<std::string>{"s", "v"});
}

TEST_CASE("transition swaps the charts termwise") {
    std::vector<std::string> tu{"t", "u"};
    Section s{{1, 3}, Chart::V0, parse_poly("u+t^3+2*t", tu)};
    Section flipped = transition(s);
    CHECK(flipped.chart == Chart::V1);
    CHECK(flipped.poly == parse_poly("v+1+2*s^2", {"s", "v"}));
}

TEST_CASE("transition is an involution on random sections") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> coeff(-9, 9);
    DivisorClass cls{3, 9};
    auto mons = basis(cls);
    for (int trial = 0; trial < 100; ++trial) {
        MultiPoly p = poly_zero(chart_vars(Chart::V0));
        for (const auto& m : mons)
            if (coeff(rng) > 3) p = p + Rational(coeff(rng)) * m;
        Section s{cls, Chart::V0, p};
        Section back = transition(transition(s));
        CHECK(back.chart == Chart::V0);
        CHECK(back.poly == p);
    }
}

TEST_CASE("transition is multiplicative") {
    std::vector<std::string> tu{"t", "u"};
    Section f{{1, 3}, Chart::V0, parse_poly("u+2*t^2-1", tu)};
    Section g{{2, 6}, Chart::V0, parse_poly("u^2+t^3*u+t", tu)};
    Section fg{{3, 9}, Chart::V0, f.poly * g.poly};
    CHECK(transition(fg).poly == transition(f).poly * transition(g).poly);
}

}  // TEST_SUITE
