#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parkpoly/counting.hpp"
#include "parkpoly/families.hpp"

using namespace parkpoly;

TEST_CASE("xpf vertices") {
    const PointSet pf3 = xpf_vertices(XpfParams(3, 1, 1));
    CHECK(pf3.size() == 10);
    CHECK(pf3.count({3, 2, 1}) == 1);
    CHECK(pf3.count({1, 1, 1}) == 1);
    CHECK(pf3.count({1, 2, 3}) == 1);
    CHECK(pf3.count({2, 2, 2}) == 0);

    CHECK(xpf_vertices(XpfParams(1, 4, 7)) == PointSet{{1}, {4}});
    CHECK(xpf_vertices(XpfParams(2, 2, 1)) ==
          PointSet{{1, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}});
}

TEST_CASE("xpf constraint system") {
    const ConstraintSystem pf3 = xpf_constraints(XpfParams(3, 1, 1));
    CHECK(pf3.cardinality_bounds == std::map<int, Coord>{{1, 3}, {2, 5}, {3, 6}});
    CHECK(pf3.redundant == std::set<int>{2});
    CHECK(pf3.lower_bounds == std::vector<Coord>{1, 1, 1});

    const ConstraintSystem x321 = xpf_constraints(XpfParams(3, 2, 1));
    CHECK(x321.cardinality_bounds == std::map<int, Coord>{{1, 4}, {2, 7}, {3, 9}});
    CHECK(x321.redundant.empty());

    const ConstraintSystem seg = xpf_constraints(XpfParams(1, 5, 9));
    CHECK(seg.cardinality_bounds == std::map<int, Coord>{{1, 5}});
    CHECK(seg.redundant.empty());
}

TEST_CASE("xpf membership") {
    const XpfParams pf3(3, 1, 1);
    CHECK(xpf_membership(pf3, 1, {2, 2, 2}));
    CHECK_FALSE(xpf_membership(pf3, 1, {3, 3, 1}));  // top-2 sum 6 > 5
    CHECK(xpf_membership(XpfParams(2, 1, 1), 2, {2, 2}));
    CHECK_FALSE(xpf_membership(pf3, 1, {0, 1, 1}));
    CHECK_THROWS_AS(xpf_membership(pf3, 0, {1, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(xpf_membership(pf3, 1, {1, 1}), std::domain_error);
}

TEST_CASE("x-parking function predicate") {
    CHECK(is_x_parking_function(XpfParams(3, 1, 1), {3, 1, 2}));
    CHECK_FALSE(is_x_parking_function(XpfParams(3, 1, 1), {2, 2, 2}));
    CHECK(is_x_parking_function(XpfParams(2, 2, 3), {2, 5}));
    CHECK_FALSE(is_x_parking_function(XpfParams(2, 2, 3), {0, 1}));
}

TEST_CASE("vertex layers") {
    CHECK(layer_of(XpfParams(3, 1, 1), {1, 1, 1}) == Layer{0});
    CHECK(layer_of(XpfParams(3, 2, 1), {2, 3, 4}) == Layer{3});
    // for a = 1 the k = 0 and k = 1 forms coincide; the maximal-k reading
    // puts the top vertex one layer down
    CHECK(layer_of(XpfParams(3, 1, 1), {1, 2, 3}) == Layer{2});
    CHECK(layer_of(XpfParams(3, 1, 2), {5, 1, 3}) == Layer{2});
    CHECK_THROWS_AS(layer_of(XpfParams(3, 1, 1), {2, 2, 2}), std::domain_error);
}

TEST_CASE("partial permutahedron vertices") {
    PointSet shifted;
    for (const LatticePoint& v : pp_vertices(3, 2)) {
        LatticePoint w = v;
        for (Coord& c : w) c += 1;
        shifted.insert(w);
    }
    CHECK(shifted == xpf_vertices(XpfParams(3, 1, 1)));

    CHECK(pp_vertices(1, 5) == PointSet{{0}, {5}});
    CHECK(pp_vertices(2, 1) == PointSet{{0, 0}, {1, 0}, {0, 1}});
}

TEST_CASE("partial permutahedron equivalence parameters") {
    const XpfParams q = xpf_pp_equivalence(3, 2);
    CHECK(q.n == 3);
    CHECK(q.a == 1);
    CHECK(q.b == 1);
    CHECK(xpf_pp_equivalence(1, 5).a == 6);
    const XpfParams q46 = xpf_pp_equivalence(4, 6);
    CHECK(q46.a == 4);
    CHECK(q46.b == 1);
    PointSet shifted;
    for (const LatticePoint& v : pp_vertices(4, 6)) {
        LatticePoint w = v;
        for (Coord& c : w) c += 1;
        shifted.insert(w);
    }
    CHECK(shifted == xpf_vertices(q46));
    CHECK_THROWS_AS(xpf_pp_equivalence(4, 2), std::domain_error);
}

TEST_CASE("permutahedron vertices") {
    CHECK(permutahedron_vertices({1, 2, 3}).size() == 6);
    CHECK(permutahedron_vertices({1, 1}).size() == 1);
    CHECK(permutahedron_vertices({1, 2, 2}).size() == 3);
    CHECK_THROWS_AS(permutahedron_vertices({}), std::domain_error);
}

TEST_CASE("weakly increasing vertices") {
    CHECK(wipf_vertices(XpfParams(3, 1, 1)) ==
          PointSet{{1, 1, 1}, {1, 1, 3}, {1, 2, 2}, {1, 2, 3}});
    const PointSet w321 = wipf_vertices(XpfParams(3, 2, 1));
    CHECK(w321.size() == 8);
    CHECK(w321.count({1, 1, 1}) == 1);
    CHECK(w321.count({2, 3, 4}) == 1);
    CHECK(wipf_vertices(XpfParams(2, 1, 2)) == PointSet{{1, 1}, {1, 3}});
    // drawn vertex sets of the four three-dimensional examples
    CHECK(wipf_vertices(XpfParams(3, 2, 2)) ==
          PointSet{{1, 1, 1}, {1, 1, 6}, {1, 4, 4}, {1, 4, 6},
                   {2, 2, 2}, {2, 2, 6}, {2, 4, 4}, {2, 4, 6}});
    CHECK(wipf_vertices(XpfParams(3, 1, 2)) ==
          PointSet{{1, 1, 1}, {1, 1, 5}, {1, 3, 3}, {1, 3, 5}});
}

TEST_CASE("pitman-stanley constraints and membership") {
    CHECK(ps_constraints({1, 1, 1}).prefix_bounds == std::vector<Coord>{1, 2, 3});
    CHECK(ps_constraints({0, 1, 1}).prefix_bounds == std::vector<Coord>{0, 1, 2});
    CHECK(ps_constraints({2, 3}).prefix_bounds == std::vector<Coord>{2, 5});
    const ConstraintSystem ps = ps_constraints({0, 1, 1});
    CHECK(contains(ps, 1, {0, 1, 1}));
    CHECK_FALSE(contains(ps, 1, {1, 0, 0}));
    CHECK_FALSE(contains(ps, 1, {0, -1, 1}));
}

TEST_CASE("T and S transforms") {
    CHECK(wipf_to_ps({1, 2, 2}) == LatticePoint{0, 1, 0});
    CHECK(ps_to_wipf({0, 1, 0}) == LatticePoint{1, 2, 2});
    // the five lattice points of X^w_3(1,1) map bijectively into PS_3(0,1,1)
    const PointSet wi{{1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 2}, {1, 2, 3}};
    const ConstraintSystem ps = ps_constraints({0, 1, 1});
    PointSet images;
    for (const LatticePoint& w : wi) {
        const LatticePoint y = wipf_to_ps(w);
        CHECK(contains(ps, 1, y));
        CHECK(ps_to_wipf(y) == w);
        images.insert(y);
    }
    CHECK(images.size() == wi.size());
    CHECK(Integer(images.size()) == lattice_points_in_dilate(ps, 1));
}

TEST_CASE("rational family vertices") {
    const PointSet v35 = rational_pf_vertices(3, 5);
    CHECK(v35.size() == 10);
    CHECK(v35.count({1, 2, 4}) == 1);  // levels (1, 2, 4) for (a,b) = (3,5)
    CHECK(rational_pf_levels(3, 4) == std::vector<Coord>{1, 2, 3});
    CHECK(rational_pf_vertices(3, 4).size() == 10);
    CHECK(rational_pf_vertices(2, 3) == PointSet{{1, 1}, {1, 2}, {2, 1}});
    CHECK(rational_pf_vertices(1, 9) == PointSet{{1}});
    CHECK_THROWS_AS(rational_pf_vertices(4, 6), std::domain_error);
}

TEST_CASE("rational family H-description") {
    const ConstraintSystem c35 = rational_pf_constraints(3, 5);
    CHECK(c35.cardinality_bounds == std::map<int, Coord>{{1, 4}, {2, 6}, {3, 7}});
    CHECK(c35.redundant == std::set<int>{2});

    const ConstraintSystem c43 = rational_pf_constraints(4, 3);  // b = a-1
    CHECK(c43.cardinality_bounds == std::map<int, Coord>{{1, 3}, {2, 5}, {3, 6}, {4, 7}});
    CHECK(c43.redundant == std::set<int>{2, 3});

    const ConstraintSystem c23 = rational_pf_constraints(2, 3);
    CHECK(c23.cardinality_bounds == std::map<int, Coord>{{1, 2}, {2, 3}});
    CHECK(c23.redundant == std::set<int>{1});

    CHECK_THROWS_AS(rational_pf_constraints(5, 2), std::domain_error);  // b < a-1 unspecified
}

TEST_CASE("dilation map fixing the all-ones point") {
    CHECK(dilate_fixing_ones(3, {1, 2, 4}) == LatticePoint{1, 4, 10});
    PointSet image;
    for (const LatticePoint& v : xpf_vertices(XpfParams(3, 1, 1)))
        image.insert(dilate_fixing_ones(2, v));
    CHECK(image == xpf_vertices(XpfParams(3, 1, 2)));
}
