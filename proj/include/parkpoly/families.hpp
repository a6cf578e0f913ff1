#pragma once

#include <map>
#include <set>
#include <vector>

#include "parkpoly/lattice.hpp"

namespace parkpoly {

/// Parameters (n, a, b) selecting one x-parking function polytope. For n = 1
/// the polytope is the segment [1, a] and b is carried but unused.
struct XpfParams {
    int n;
    Coord a;
    Coord b;

    XpfParams(int n_, Coord a_, Coord b_ = 1);
};

/// Vertex layer n - k, where k is the number of coordinates equal to 1.
/// The all-ones vertex is on layer 0.
struct Layer {
    int value;
    friend bool operator==(const Layer&, const Layer&) = default;
};

enum class ConstraintKind { symmetric, prefix };

/// H-description in one of two shapes:
///  - symmetric: per-coordinate lower bounds plus cardinality bounds
///    "sum of any k coordinates <= rhs_k", stored once per k (the system is
///    invariant under coordinate permutations, so per-subset storage would
///    blow 2^n constraints out of nothing);
///  - prefix: y_i >= 0 and y_1 + ... + y_i <= bound_i.
/// `redundant` flags cardinality bounds that are valid but implied by the
/// rest (they support no facet and are skipped by face enumeration).
struct ConstraintSystem {
    ConstraintKind kind = ConstraintKind::symmetric;
    int n = 0;
    std::vector<Coord> lower_bounds;
    std::map<int, Coord> cardinality_bounds;
    std::set<int> redundant;
    std::vector<Coord> prefix_bounds;
};

/// Membership of pt in the t-dilate of the described polytope. For the
/// symmetric kind "sum of any k" reduces to "sum of the k largest".
bool contains(const ConstraintSystem& sys, Coord t, const LatticePoint& pt);

/// All vertices: permutations of (1,...,1 [k ones], a+kb, ..., a+(n-1)b)
/// over 0 <= k <= n, deduplicated (for a = 1 the k = 0 and k = 1 layers
/// coincide).
PointSet xpf_vertices(const XpfParams& p);

/// Minimal symmetric H-description: 1 <= x_i and, for each admissible k,
/// sum of any k coordinates <= rhs_k = k*a + b*k*(2n-k-1)/2. For a = 1 the
/// k = n-1 bound is implied by the full-sum bound and is stored flagged
/// redundant.
ConstraintSystem xpf_constraints(const XpfParams& p);

/// pt in t * X_n(a,b); throws for t <= 0 or a length mismatch.
bool xpf_membership(const XpfParams& p, Coord t, const LatticePoint& pt);

/// Positive entries whose ascending rearrangement satisfies
/// b_i <= a + (i-1)b.
bool is_x_parking_function(const XpfParams& p, const LatticePoint& pt);

/// Layer of a vertex; throws if v is not a vertex of X_n(a,b). For a = 1 the
/// two coinciding top forms are assigned the maximal k (fewest coordinates
/// above 1), matching the one-fewer-layer count of the a = 1 case.
Layer layer_of(const XpfParams& p, const LatticePoint& v);

/// Partial permutahedron vertices: permutations of
/// (0,...,0, p-k+1, ..., p-1, p) for 0 <= k <= min(n, p).
PointSet pp_vertices(int n, Coord p);

/// The (n, a, b) parameters of the x-parking function polytope integrally
/// equivalent to P(n, p): b = 1 and a = p - n + 2 for n >= 2, a = p + 1 for
/// n = 1. Throws for p < n - 1 (no equivalence there).
XpfParams xpf_pp_equivalence(int n, Coord p);

/// All distinct permutations of r.
PointSet permutahedron_vertices(const LatticePoint& r);

/// Vertices of the weakly increasing polytope X^w_n(a,b): v_1 in {1, a} and
/// each v_{i+1} either repeats v_i or jumps to the maximum a + i*b. The
/// binary min/max construction generalizes the (1,1) case; convex position
/// of every generated point is certified in the test suite via tight
/// constraint rank on the Pitman-Stanley side.
PointSet wipf_vertices(const XpfParams& p);

/// Pitman-Stanley system: y_i >= 0, y_1 + ... + y_i <= x_1 + ... + x_i.
ConstraintSystem ps_constraints(const std::vector<Coord>& x);

/// T(x) = (x_1 - 1, x_2 - x_1, ..., x_n - x_{n-1}): weakly increasing
/// parking functions -> Pitman-Stanley lattice points.
LatticePoint wipf_to_ps(const LatticePoint& pt);

/// S(y) = (1 + y_1, 1 + y_1 + y_2, ...): inverse of wipf_to_ps.
LatticePoint ps_to_wipf(const LatticePoint& pt);

/// Level values b_1 = 1, b_i = ceil(b(i-1)/a) of the rational (a,b) family.
std::vector<Coord> rational_pf_levels(Coord a, Coord b);

/// Vertices of the rational (a,b)-parking function polytope: permutations of
/// (1,...,1 [k ones], b_{k+1}, ..., b_a) for 1 <= k <= a. Requires coprime
/// a, b.
PointSet rational_pf_vertices(Coord a, Coord b);

/// Symmetric H-description of the rational polytope with
/// rhs_k = b_{a-k+1} + ... + b_a. Stated only for b > a and b = a - 1;
/// other shapes are rejected. Implied bounds (k = a-1, and also k = a-2
/// when b = a - 1) are stored flagged redundant.
///
/// Facet counts from the census of non-redundant constraints: 2^a - 1 for
/// b > a, and 2^a - 1 - C(a,2) for b = a - 1. A simplified closed form
/// sometimes quoted for the latter, 2^a - (a-2)(a+1)/2, is off by 2 from
/// the census; only the census value is used here.
ConstraintSystem rational_pf_constraints(Coord a, Coord b);

/// The dilation map fixing the all-ones point: x -> d(x - 1) + 1
/// componentwise. This is not the Ehrhart dilate t*P, which is plain
/// scaling.
LatticePoint dilate_fixing_ones(Coord d, const LatticePoint& pt);

}  // namespace parkpoly
