#pragma once

#include <utility>
#include <vector>

#include "parkpoly/families.hpp"
#include "parkpoly/rational.hpp"

namespace parkpoly {

/// Face counts by dimension, entries 0..n with entries[n] = 1.
using FVector = std::vector<Integer>;

/// a(a+nb)^{n-1}.
Integer count_x_parking_functions(const XpfParams& p);

/// Brute-force oracle: all integer vectors in [1, a+(n-1)b]^n passing
/// is_x_parking_function.
PointSet enumerate_x_parking_functions(const XpfParams& p);

/// n! (1/1! + ... + 1/n!) for a = 1, n! (1/0! + ... + 1/n!) for a > 1.
Integer vertex_count_formula(const XpfParams& p);

/// 2^n - 1 for a = 1, 2^n - 1 + n for a > 1. Requires n >= 2 (the n = 1
/// segment is a special case the formula does not cover).
Integer facet_count_formula(const XpfParams& p);

/// n/2 times the vertex count; the graph of the polytope is n-regular.
Integer edge_count_formula(const XpfParams& p);

/// f_k = sum over m of C(n,m) (n-k-m)! S(n-m+1, n-k-m+1), with m = 1
/// excluded when a = 1.
FVector f_vector_formula(const XpfParams& p);

/// Exhaustive face enumeration for n <= 4: expand the symmetric system to
/// explicit facet inequalities, intersect facet vertex sets over all
/// subsets, dedupe faces by vertex set, and bucket by affine rank.
FVector brute_force_faces(const XpfParams& p);

/// All faces of X_n(a,b) as vertex sets (the n <= 4 oracle underlying
/// brute_force_faces); includes the polytope itself.
std::vector<PointSet> brute_force_face_sets(const XpfParams& p);

/// Among all faces of PF_n, the number whose vertex set is an embedded
/// PF_{n-1} with one coordinate pinned to n (first) and the number equal to
/// the full permutahedron vertex set (second). 2 <= n <= 4.
std::pair<int, int> permutahedron_facet_census(int n);

/// Exact |tP ∩ Z^n| for a bounded system. Symmetric systems are counted
/// orbit-compressed: weakly decreasing tuples with prefix-sum pruning,
/// weighted by their permutation multiplicity.
Integer lattice_points_in_dilate(const ConstraintSystem& sys, Coord t);

/// (1/n!) (t(a-1)+1) prod_{j=2..n} (t(a-1+nb)+j).
Integer wipf_ehrhart_formula(const XpfParams& p, Coord t);

/// Vertex count of the rational (a,b) polytope from the published closed
/// forms (b > a and b < a shapes). The dedupe oracle rational_pf_vertices
/// is the ground truth; this formula is verification-only.
Integer rational_vertex_count(Coord a, Coord b);

struct WipfFaceCounts {
    Integer facets;
    Integer vertices;
    Integer edges;
};

/// (2(n-1), 2^{n-1}, 2^{n-2}(n-1)) for X^w_n(1,1), n >= 2.
WipfFaceCounts wipf_face_counts(int n);

/// Labeled-path oracle for the rational family: enumerate (a,b)-Dyck paths
/// and weight each by the number of column-increasing labelings. Equals
/// b^{a-1} for coprime (a,b).
Integer count_rational_parking_functions_paths(Coord a, Coord b);

}  // namespace parkpoly
