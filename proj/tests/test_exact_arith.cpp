#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "parkpoly/counting.hpp"
#include "parkpoly/matrix.hpp"
#include "parkpoly/numeric.hpp"
#include "parkpoly/polynomial.hpp"
#include "parkpoly/rational.hpp"

using namespace parkpoly;

TEST_CASE("rational normalization and serialization") {
    const Rational r(Integer(6), Integer(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(0).str() == "0/1");
    CHECK(Rational(24).to_integer() == 24);
    CHECK_THROWS_AS(Rational(1, 2).to_integer(), std::logic_error);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rat_pow handles negative exponents") {
    CHECK(rat_pow(Rational(2, 3), 2) == Rational(4, 9));
    CHECK(rat_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(rat_pow(Rational(5), 0) == Rational(1));
    CHECK_THROWS_AS(rat_pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("binomial") {
    CHECK(binomial(3, 2) == 3);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(10, -1) == 0);
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("odd double factorial and the negative convention") {
    CHECK(odd_double_factorial(5) == 15);
    CHECK(odd_double_factorial(1) == 1);
    CHECK(odd_double_factorial(-1) == 1);
    CHECK(odd_double_factorial(-3) == -1);
    CHECK_THROWS_AS(odd_double_factorial(4), std::domain_error);
    CHECK_THROWS_AS(odd_double_factorial(-5), std::domain_error);

    // m!! = (m+2)!!/(m+2) extension, checked as a product identity
    for (long m = -3; m <= 49; m += 2)
        CHECK(odd_double_factorial(m + 2) == (m + 2) * odd_double_factorial(m));
}

TEST_CASE("stirling2 values and Bell row sums") {
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 5) == 0);
    CHECK_THROWS_AS(stirling2(-1, 0), std::domain_error);

    // independent Bell recurrence B_{m+1} = sum_k C(m,k) B_k
    std::vector<Integer> bell{1};
    for (int m = 0; m < 12; ++m) {
        Integer next = 0;
        for (int k = 0; k <= m; ++k) next += binomial(m, k) * bell[static_cast<size_t>(k)];
        bell.push_back(next);
    }
    for (int n = 0; n <= 12; ++n) {
        Integer row = 0;
        for (int k = 0; k <= n; ++k) row += stirling2(n, k);
        CHECK(row == bell[static_cast<size_t>(n)]);
    }
}

TEST_CASE("lagrange interpolation on pinned examples") {
    const Polynomial line = lagrange_interpolate({{Rational(0), Rational(1)},
                                                  {Rational(1), Rational(2)}});
    CHECK(line == Polynomial({Rational(1), Rational(1)}));

    const Polynomial square = lagrange_interpolate({{Rational(0), Rational(1)},
                                                    {Rational(1), Rational(4)},
                                                    {Rational(2), Rational(9)}});
    CHECK(square == Polynomial({Rational(1), Rational(2), Rational(1)}));

    CHECK_THROWS_AS(lagrange_interpolate({}), std::domain_error);
    CHECK_THROWS_AS(lagrange_interpolate({{Rational(1), Rational(0)},
                                          {Rational(1), Rational(1)}}),
                    std::domain_error);
}

TEST_CASE("lagrange through PF_2 dilate counts has leading coefficient 1/2") {
    // counts come from the enumeration oracle, not from any volume formula
    const ConstraintSystem sys = xpf_constraints(XpfParams(2, 1, 1));
    std::vector<std::pair<Rational, Rational>> pts{{Rational(0), Rational(1)}};
    for (Coord t = 1; t <= 2; ++t)
        pts.emplace_back(Rational(t), Rational(lattice_points_in_dilate(sys, t)));
    const Polynomial ehr = lagrange_interpolate(pts);
    CHECK(ehr.degree() == 2);
    CHECK(ehr.coeff(2) == Rational(1, 2));
}

TEST_CASE("interpolation reproduces every input point") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 7);
    for (int round = 0; round < 25; ++round) {
        std::vector<std::pair<Rational, Rational>> pts;
        for (int i = 0; i < 6; ++i)  // x = i + 1/d is distinct across i
            pts.emplace_back(Rational(i) + Rational(1, den(rng)), Rational(num(rng), den(rng)));
        const Polynomial p = lagrange_interpolate(pts);
        CHECK(p.degree() < 6);
        for (const auto& [x, y] : pts) CHECK(p.evaluate(x) == y);
    }
}

TEST_CASE("affine rank") {
    CHECK(affine_rank({{1, 1}, {2, 2}}) == 1);
    CHECK(affine_rank({{1, 1, 1}}) == 0);
    const PointSet hexagon = permutahedron_vertices({1, 2, 3});
    CHECK(affine_rank({hexagon.begin(), hexagon.end()}) == 2);
    CHECK_THROWS_AS(affine_rank({}), std::domain_error);
    CHECK_THROWS_AS(affine_rank({{1, 2}, {1, 2, 3}}), std::domain_error);
}

TEST_CASE("affine rank is invariant under translation and coordinate permutation") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<Coord> coord(-4, 4);
    for (int round = 0; round < 20; ++round) {
        std::vector<LatticePoint> pts;
        for (int i = 0; i < 5; ++i) pts.push_back({coord(rng), coord(rng), coord(rng), coord(rng)});
        const int base = affine_rank(pts);

        LatticePoint shift{coord(rng), coord(rng), coord(rng), coord(rng)};
        std::vector<LatticePoint> moved = pts;
        for (auto& p : moved)
            for (size_t j = 0; j < p.size(); ++j) p[j] += shift[j];
        CHECK(affine_rank(moved) == base);

        std::vector<size_t> perm{0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<LatticePoint> permuted;
        for (const auto& p : pts) {
            LatticePoint q(p.size());
            for (size_t j = 0; j < p.size(); ++j) q[j] = p[perm[j]];
            permuted.push_back(q);
        }
        CHECK(affine_rank(permuted) == base);
    }
}

TEST_CASE("polynomial normalization trims trailing zeros") {
    CHECK(Polynomial({Rational(1), Rational(0)}) == Polynomial({Rational(1)}));
    CHECK(Polynomial({Rational(0)}).degree() == -1);
    CHECK(Polynomial().evaluate(Rational(5)) == Rational(0));
}
