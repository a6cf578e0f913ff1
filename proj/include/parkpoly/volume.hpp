#pragma once

#include <string>
#include <vector>

#include "parkpoly/families.hpp"
#include "parkpoly/rational.hpp"

namespace parkpoly {

/// Euclidean and normalized volume of one polytope. The literature mixes
/// Vol and nVol freely, so both are carried and the n!-relation is asserted
/// at construction sites; `source` tags which formula produced the value.
struct VolumeResult {
    Rational euclidean;
    Integer normalized;
    std::string source;
};

/// Closed form: nVol(X_n(a,b)) =
/// -n! (b/2)^n sum_i C(n,i) (2i-3)!! (2n-1 + (2a-2)/b)^{n-i},
/// evaluated entirely in rationals. The result must come out a nonnegative
/// integer; anything else is an internal error.
VolumeResult nvol_closed_form(const XpfParams& p);

/// Recursive sequence V_0 = 1, V_1 = a-1,
/// V_n = (1/n) sum_k C(n,k) (b(n-k))^{n-k-1} (nb+kb-b+2a-2)/2 V_k.
/// Euclidean volumes; normalized is n! times that.
VolumeResult vol_recursive_generalized(int n, Coord a, Coord b);

/// Classical recursion with nVol(PF_0) = 1, nVol(PF_1) = 0.
Integer nvol_aw_recursion(int n);

/// Partial permutahedron recursion
/// nVol(P(n,p)) = (n-1)! sum_{k=1}^n k^{k-2} nVol(P(n-k,p-k))/(n-k)!
///                (kp - C(k,2)) C(n,k),
/// with nVol(P(0,p)) = 1. Stated for p >= n-1 only.
Integer nvol_bcc_recursion(int n, Coord p);

/// The two classical sums for nVol(PF_n), n >= 2. The first carries a
/// (2n-1)^{-1} term at i = n and must be evaluated in rationals.
Integer nvol_shephard_iv(int n);
Integer nvol_shephard_v(int n);

/// Number of n x n (0,1)-matrices with exactly two 1's in each row whose
/// permanent is positive. Positivity is decided by a system-of-distinct-
/// representatives check (every component of the column multigraph must be
/// unicyclic), never by expanding the permanent. Guarded to 1 <= n <= 6.
Integer count_permanent_positive(int n);

/// Direct evaluation of f(n) = sum_i F(n,i) with
/// F(n,i) = C(n,i) (2i)! (2n-1)^{n-i-1} [(2i-1)^2 + (2n-1)] / (2^i i! (2i-1)).
/// Also verifies the telescoping certificate G(n,i+1) - G(n,i) = F(n,i) for
/// R(n,i) = (-2n+1)i / (2i^2 - 2i + n) at every i in 0..n, throwing if the
/// certificate fails. The sum itself is returned (it should be 0).
Rational wz_difference(int n);

/// c_0 = 1, c_1 = 0, c_k = 2(k-1)(c_{k-1} - c_{k-2}); the coefficient
/// sequence of the EGF sqrt(1-2x) e^x.
struct CkSequence {
    std::vector<Integer> values;
};
CkSequence ck_sequence(int N);

/// nVol(P(n,p)) = n! sum_k C(n,k) c_k / 2^k p^{n-k}, p >= n-1.
Integer nvol_pp_ck(int n, Coord p);

/// nVol(P(n,p)) = -n!/2^n sum_i C(n,i) (2i-3)!! (2p+1)^{n-i}, p >= n-1.
Integer nvol_pp_explicit(int n, Coord p);

/// Independent volume oracle: count lattice points of the t-dilates for
/// t = 0..dim (t = 0 contributes 1, the Ehrhart constant term), interpolate
/// the degree-dim polynomial exactly, and read the volume off the leading
/// coefficient: euclidean = [t^dim], normalized = dim! * [t^dim].
VolumeResult ehrhart_volume_oracle(const ConstraintSystem& sys, int dim);

/// n^{n-2}: normalized volume of the (n-1)-dimensional polytope X^w_n(1,1)
/// with respect to the lattice induced on its affine span, n >= 2.
Integer nvol_wipf(int n);

}  // namespace parkpoly
