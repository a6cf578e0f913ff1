#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parkpoly/counting.hpp"
#include "parkpoly/numeric.hpp"
#include "parkpoly/volume.hpp"

using namespace parkpoly;

TEST_CASE("closed-form normalized volume") {
    CHECK(nvol_closed_form(XpfParams(2, 1, 1)).normalized == 1);
    CHECK(nvol_closed_form(XpfParams(3, 1, 1)).normalized == 24);
    CHECK(nvol_closed_form(XpfParams(7, 1, 1)).normalized == 651354480);
    for (Coord a = 1; a <= 6; ++a)
        CHECK(nvol_closed_form(XpfParams(1, a, 3)).normalized == a - 1);
    // X_3(2,1) is an integrally shifted P(3,3)
    CHECK(nvol_closed_form(XpfParams(3, 2, 1)).normalized == nvol_bcc_recursion(3, 3));
    const VolumeResult v = nvol_closed_form(XpfParams(4, 2, 3));
    CHECK(Rational(factorial(4)) * v.euclidean == Rational(v.normalized));
}

TEST_CASE("the negative double factorial convention is load-bearing") {
    // rebuilding the n = 2 classical sum with (-3)!! misread as +1 gives -8,
    // not the published 1; the acceptance sequence would catch the flip
    const long n = 2;
    Integer flipped_sum = 0;
    for (long i = 0; i <= n; ++i) {
        const Integer ddf = i == 0 ? Integer(1) : odd_double_factorial(2 * i - 3);
        flipped_sum += binomial(n, i) * ddf * int_pow(Integer(2 * n - 1),
                                                      static_cast<unsigned long>(n - i));
    }
    const Rational flipped = Rational(-1) * Rational(factorial(n), int_pow(2, 2)) *
                             Rational(flipped_sum);
    CHECK(flipped == Rational(-8));
    CHECK(flipped != Rational(nvol_closed_form(XpfParams(2, 1, 1)).normalized));
}

TEST_CASE("generalized recursion") {
    for (Coord a = 1; a <= 5; ++a) CHECK(vol_recursive_generalized(1, a, 2).euclidean == a - 1);
    for (int n = 0; n <= 8; ++n)
        CHECK(vol_recursive_generalized(n, 1, 1).normalized == nvol_aw_recursion(n));
    CHECK(vol_recursive_generalized(3, 1, 2).normalized == 192);  // 2^3 * 24
}

TEST_CASE("classical recursion") {
    CHECK(nvol_aw_recursion(0) == 1);
    CHECK(nvol_aw_recursion(1) == 0);
    CHECK(nvol_aw_recursion(2) == 1);
    CHECK(nvol_aw_recursion(5) == 59040);
}

TEST_CASE("partial permutahedron recursion") {
    CHECK(nvol_bcc_recursion(3, 2) == 24);
    CHECK(nvol_bcc_recursion(0, 7) == 1);
    CHECK(nvol_bcc_recursion(1, 5) == 5);
    // P(2,3) is a shifted X_2(3,1); the Ehrhart oracle arbitrates
    CHECK(nvol_bcc_recursion(2, 3) ==
          ehrhart_volume_oracle(xpf_constraints(XpfParams(2, 3, 1)), 2).normalized);
    CHECK_THROWS_AS(nvol_bcc_recursion(4, 2), std::domain_error);
}

TEST_CASE("shephard sums") {
    CHECK(nvol_shephard_iv(2) == 1);
    CHECK(nvol_shephard_v(2) == 1);
    CHECK(nvol_shephard_iv(3) == 24);
    CHECK(nvol_shephard_v(3) == 24);
    CHECK(nvol_shephard_iv(6) == 5295150);
    CHECK(nvol_shephard_v(6) == 5295150);
    CHECK_THROWS_AS(nvol_shephard_iv(1), std::domain_error);
    CHECK_THROWS_AS(nvol_shephard_v(1), std::domain_error);
}

TEST_CASE("permanent positivity census") {
    CHECK(count_permanent_positive(1) == 0);
    CHECK(count_permanent_positive(2) == 1);
    CHECK(count_permanent_positive(3) == 24);
    CHECK(count_permanent_positive(4) == 954);
    CHECK_THROWS_AS(count_permanent_positive(7), std::domain_error);
}

TEST_CASE("WZ telescoping") {
    CHECK(wz_difference(2) == Rational(0));
    CHECK(wz_difference(3) == Rational(0));  // certificate verified at every i internally
    CHECK(wz_difference(5) == Rational(0));
    CHECK_THROWS_AS(wz_difference(1), std::domain_error);
}

TEST_CASE("c_k sequence and the partial permutahedron closed forms") {
    const CkSequence ck = ck_sequence(4);
    CHECK(ck.values[0] == 1);
    CHECK(ck.values[1] == 0);
    CHECK(ck.values[2] == -2);
    CHECK(ck.values[3] == -8);
    for (Coord p = 0; p <= 5; ++p) CHECK(nvol_pp_ck(1, p) == p);
    CHECK(nvol_pp_ck(3, 2) == 24);
    CHECK(nvol_pp_explicit(3, 2) == 24);
    CHECK_THROWS_AS(nvol_pp_ck(4, 2), std::domain_error);
    CHECK_THROWS_AS(nvol_pp_explicit(4, 2), std::domain_error);
}

TEST_CASE("ehrhart volume oracle") {
    CHECK(ehrhart_volume_oracle(xpf_constraints(XpfParams(2, 1, 1)), 2).normalized == 1);
    CHECK(ehrhart_volume_oracle(xpf_constraints(XpfParams(3, 1, 1)), 3).normalized == 24);
    // one step past the acceptance grid
    CHECK(ehrhart_volume_oracle(xpf_constraints(XpfParams(5, 1, 1)), 5).normalized == 59040);
    // X^w_3(1,1) through its Pitman-Stanley image: area 3/2, normalized 3
    const VolumeResult w3 = ehrhart_volume_oracle(ps_constraints({0, 1, 1}), 2);
    CHECK(w3.euclidean == Rational(3, 2));
    CHECK(w3.normalized == 3);
}

TEST_CASE("weakly increasing volume") {
    CHECK(nvol_wipf(2) == 1);
    CHECK(nvol_wipf(3) == 3);
    CHECK(nvol_wipf(4) == 16);
    CHECK(ehrhart_volume_oracle(ps_constraints({0, 1, 1, 1}), 3).normalized == 16);
    CHECK_THROWS_AS(nvol_wipf(1), std::domain_error);
}
