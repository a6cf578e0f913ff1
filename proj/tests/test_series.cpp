#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "parkpoly/numeric.hpp"
#include "parkpoly/series.hpp"
#include "parkpoly/volume.hpp"

using namespace parkpoly;

namespace {

PowerSeries random_series(std::mt19937& rng, int order, bool zero_constant) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    PowerSeries s(order);
    for (int i = zero_constant ? 1 : 0; i <= order; ++i)
        s.set_coeff(i, Rational(num(rng), den(rng)));
    return s;
}

}  // namespace

TEST_CASE("series op preconditions and order propagation") {
    PowerSeries s(5);
    s.set_coeff(0, Rational(1));
    CHECK_THROWS_AS(s.coeff(6), std::out_of_range);
    CHECK_THROWS_AS(ps_exp(s), std::domain_error);       // nonzero constant term
    CHECK_THROWS_AS(ps_sqrt(PowerSeries(4)), std::domain_error);  // constant term 0, not 1
    CHECK_THROWS_AS(ps_compose(s, s), std::domain_error);

    const PowerSeries a(5), b(3);
    CHECK(ps_mul(a, b).order() == 3);
    CHECK(ps_add(a, b).order() == 3);
    CHECK(ps_integrate(b).order() == 4);
    CHECK(ps_derive(b).order() == 2);
    CHECK(ps_shift(b, 2).order() == 5);
}

TEST_CASE("exp, sqrt and compose on pinned examples") {
    const PowerSeries e = ps_exp(PowerSeries::x(3));
    CHECK(e.coeff(0) == Rational(1));
    CHECK(e.coeff(1) == Rational(1));
    CHECK(e.coeff(2) == Rational(1, 2));
    CHECK(e.coeff(3) == Rational(1, 6));

    PowerSeries u(2);
    u.set_coeff(0, Rational(1));
    u.set_coeff(1, Rational(-2));
    const PowerSeries r = ps_sqrt(u);
    CHECK(r.coeff(0) == Rational(1));
    CHECK(r.coeff(1) == Rational(-1));
    CHECK(r.coeff(2) == Rational(-1, 2));

    PowerSeries outer(3);
    outer.set_coeff(2, Rational(1));  // y^2
    PowerSeries inner(3);
    inner.set_coeff(1, Rational(1));
    inner.set_coeff(2, Rational(1));  // x + x^2
    const PowerSeries c = ps_compose(outer, inner);
    CHECK(c.coeff(0) == Rational(0));
    CHECK(c.coeff(1) == Rational(0));
    CHECK(c.coeff(2) == Rational(1));
    CHECK(c.coeff(3) == Rational(2));
}

TEST_CASE("series algebra properties") {
    std::mt19937 rng(424242);
    for (int round = 0; round < 10; ++round) {
        const PowerSeries s = random_series(rng, 8, true);
        CHECK(equal_through(ps_integrate(ps_derive(s)), s, 7));
        CHECK(equal_through(ps_derive(ps_integrate(s)), s, 8));

        const PowerSeries e = ps_exp(s);
        const PowerSeries einv = ps_exp(ps_scale(Rational(-1), s));
        CHECK(equal_through(ps_mul(e, einv), PowerSeries::constant(Rational(1), 8), 8));
        // (exp s)' = s' exp s
        CHECK(equal_through(ps_derive(e), ps_mul(ps_derive(s), e), 7));

        PowerSeries u = random_series(rng, 8, true);
        u.set_coeff(0, Rational(1));
        CHECK(equal_through(ps_mul(ps_sqrt(u), ps_sqrt(u)), u, 8));
    }
}

TEST_CASE("tree function series") {
    const PowerSeries g1 = g_b_series(1, 3);
    CHECK(g1.coeff(0) == Rational(0));
    CHECK(g1.coeff(1) == Rational(1));
    CHECK(g1.coeff(2) == Rational(1));
    CHECK(g1.coeff(3) == Rational(3, 2));

    const PowerSeries g2 = g_b_series(2, 2);
    CHECK(g2.coeff(1) == Rational(1));
    CHECK(g2.coeff(2) == Rational(2));

    for (Coord b = 1; b <= 6; ++b) CHECK(g_b_series(b, 4).coeff(1) == Rational(1));
}

TEST_CASE("functional equation g = x exp(b g)") {
    CHECK(verify_functional_equation(1, 8));
    CHECK(verify_functional_equation(3, 6));
    // negative control: perturbing one coefficient must break the identity
    PowerSeries g = g_b_series(2, 6);
    g.set_coeff(4, g.coeff(4) + Rational(1));
    const PowerSeries rhs = ps_shift(ps_exp(ps_scale(Rational(2), g)), 1);
    CHECK_FALSE(equal_through(g, rhs, 6));
}

TEST_CASE("volume EGF coefficients") {
    const PowerSeries f11 = f_ab_series(1, 1, 4);
    CHECK(f11.coeff(0) == Rational(1));
    CHECK(f11.coeff(1) == Rational(0));
    CHECK(f11.coeff(2) == Rational(1, 4));  // V_2 = 1/2, over 2!

    for (Coord a = 1; a <= 4; ++a)
        for (Coord b = 1; b <= 3; ++b)
            CHECK(f_ab_series(a, b, 3).coeff(1) == Rational(Integer(a - 1)));

    // ties the EGF to the recursion at higher order
    const PowerSeries f23 = f_ab_series(2, 3, 6);
    for (int n = 0; n <= 6; ++n)
        CHECK(f23.coeff(n) ==
              vol_recursive_generalized(n, 2, 3).euclidean / Rational(factorial(n)));
}

TEST_CASE("c_k EGF cross-check") {
    CHECK(ck_egf_check(10));
    // direct expansion: sqrt(1-2x) e^x = 1 + 0x - x^2 + ..., so c_2 = -2
    PowerSeries u(2);
    u.set_coeff(0, Rational(1));
    u.set_coeff(1, Rational(-2));
    const PowerSeries egf = ps_mul(ps_sqrt(u), ps_exp(PowerSeries::x(2)));
    CHECK(egf.coeff(1) == Rational(0));
    CHECK(Rational(factorial(2)) * egf.coeff(2) == Rational(-2));
}
