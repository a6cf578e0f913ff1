#include "parkpoly/checks.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "parkpoly/counting.hpp"
#include "parkpoly/families.hpp"
#include "parkpoly/matrix.hpp"
#include "parkpoly/numeric.hpp"
#include "parkpoly/series.hpp"
#include "parkpoly/volume.hpp"

namespace parkpoly {

namespace {

// Accumulates mismatches; a check passes when nothing was reported.
class Tally {
public:
    void expect(bool ok, const std::function<std::string()>& describe) {
        ++total_;
        if (ok) return;
        ++failed_;
        if (failed_ == 1) first_ = describe();
    }

    template <typename L, typename R>
    void expect_eq(const L& lhs, const R& rhs, const std::string& where) {
        const bool ok = lhs == rhs;
        ++total_;
        if (ok) return;
        ++failed_;
        if (failed_ == 1) {
            std::ostringstream os;
            os << where << ": " << str_of(lhs) << " vs " << str_of(rhs);
            first_ = os.str();
        }
    }

    CheckResult result(const std::string& name) const {
        CheckResult r;
        r.name = name;
        r.pass = failed_ == 0;
        std::ostringstream os;
        if (r.pass) {
            os << total_ << " comparisons, all exact";
        } else {
            os << failed_ << "/" << total_ << " mismatches; first: " << first_;
        }
        r.details = os.str();
        return r;
    }

private:
    static std::string str_of(const Integer& v) { return v.get_str(); }
    static std::string str_of(const Rational& v) { return v.str(); }
    static std::string str_of(long v) { return std::to_string(v); }
    static std::string str_of(unsigned long v) { return std::to_string(v); }
    static std::string str_of(int v) { return std::to_string(v); }
    static std::string str_of(bool v) { return v ? "true" : "false"; }
    template <typename T>
    static std::string str_of(const std::vector<T>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += str_of(v[i]);
        }
        return s + "]";
    }

    long total_ = 0;
    long failed_ = 0;
    std::string first_;
};

std::string grid_tag(int n, Coord a, Coord b) {
    return "(n=" + std::to_string(n) + ",a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")";
}

// ---- shared small oracles -------------------------------------------------

PointSet prefix_lattice_points(const ConstraintSystem& sys, Coord t) {
    PointSet out;
    LatticePoint y(static_cast<size_t>(sys.n));
    std::function<void(int, Coord)> rec = [&](int i, Coord prefix) {
        if (i == sys.n) {
            out.insert(y);
            return;
        }
        const Coord hi = t * sys.prefix_bounds[static_cast<size_t>(i)] - prefix;
        for (Coord v = t * sys.lower_bounds[static_cast<size_t>(i)]; v <= hi; ++v) {
            y[static_cast<size_t>(i)] = v;
            rec(i + 1, prefix + v);
        }
    };
    rec(0, 0);
    return out;
}

PointSet weakly_increasing_parking_functions(const XpfParams& p) {
    PointSet out;
    LatticePoint v(static_cast<size_t>(p.n));
    std::function<void(int, Coord)> rec = [&](int i, Coord lo) {
        if (i == p.n) {
            out.insert(v);
            return;
        }
        for (Coord x = lo; x <= p.a + i * p.b; ++x) {
            v[static_cast<size_t>(i)] = x;
            rec(i + 1, x);
        }
    };
    rec(0, 1);
    return out;
}

// Tight constraint normals of a symmetric system at a contained point:
// rows e_i for tight lower bounds, indicator vectors for tight cardinality
// subsets. Redundant (non-facet) bounds are included only when asked; they
// are valid inequalities, so either way the rank certificate is sound.
std::vector<std::vector<int>> symmetric_tight_normals(const ConstraintSystem& sys,
                                                      const LatticePoint& v,
                                                      bool include_redundant) {
    const int n = sys.n;
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < n; ++i)
        if (v[static_cast<size_t>(i)] == sys.lower_bounds[static_cast<size_t>(i)]) {
            std::vector<int> e(static_cast<size_t>(n), 0);
            e[static_cast<size_t>(i)] = 1;
            rows.push_back(std::move(e));
        }
    for (const auto& [k, rhs] : sys.cardinality_bounds) {
        if (!include_redundant && sys.redundant.count(k)) continue;
        std::vector<int> idx(static_cast<size_t>(k));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            Coord s = 0;
            for (int i : idx) s += v[static_cast<size_t>(i)];
            if (s == rhs) {
                std::vector<int> row(static_cast<size_t>(n), 0);
                for (int i : idx) row[static_cast<size_t>(i)] = 1;
                rows.push_back(std::move(row));
            }
            int pos = k - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - k + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (int j = pos + 1; j < k; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return rows;
}

int normal_rank(const std::vector<std::vector<int>>& rows, int n) {
    if (rows.empty()) return 0;
    RationalMatrix m(rows.size(), static_cast<size_t>(n));
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < n; ++c) m.at(r, static_cast<size_t>(c)) = Rational(rows[r][static_cast<size_t>(c)]);
    return static_cast<int>(m.rank());
}

Integer catalan(int n) { return binomial(2 * n, n) / (n + 1); }

// ---- volume suite ----------------------------------------------------------

CheckResult chk_published_sequence() {
    Tally t;
    const long expected[] = {0,     1,        24,        954,          59040,
                                  5295150, 651354480, 105393619800, 21717404916480};
    for (int n = 1; n <= 9; ++n)
        t.expect_eq(nvol_closed_form(XpfParams(n, 1, 1)).normalized,
                    Integer(expected[n - 1]), "nvol(PF_" + std::to_string(n) + ")");
    return t.result("volume/published-sequence");
}

CheckResult chk_five_way() {
    Tally t;
    for (int n = 2; n <= 8; ++n) {
        const Integer aw = nvol_aw_recursion(n);
        t.expect_eq(nvol_bcc_recursion(n, n - 1), aw, "bcc vs aw, n=" + std::to_string(n));
        t.expect_eq(nvol_closed_form(XpfParams(n, 1, 1)).normalized, aw,
                    "closed vs aw, n=" + std::to_string(n));
        t.expect_eq(nvol_shephard_iv(n), aw, "shephard-iv vs aw, n=" + std::to_string(n));
        t.expect_eq(nvol_shephard_v(n), aw, "shephard-v vs aw, n=" + std::to_string(n));
    }
    return t.result("volume/five-way-equality");
}

CheckResult chk_permanent_census() {
    Tally t;
    for (int n = 2; n <= 5; ++n)
        t.expect_eq(count_permanent_positive(n), nvol_aw_recursion(n),
                    "permanent census, n=" + std::to_string(n));
    return t.result("volume/permanent-census");
}

CheckResult chk_ehrhart_oracle_grid() {
    Tally t;
    for (int n = 1; n <= 4; ++n)
        for (Coord a = 1; a <= 3; ++a)
            for (Coord b = 1; b <= 2; ++b) {
                const XpfParams p(n, a, b);
                t.expect_eq(ehrhart_volume_oracle(xpf_constraints(p), n).normalized,
                            nvol_closed_form(p).normalized, "oracle vs closed " + grid_tag(n, a, b));
            }
    return t.result("volume/ehrhart-oracle-grid");
}

CheckResult chk_bcc_conjecture() {
    Tally t;
    for (int n = 0; n <= 6; ++n)
        for (Coord p = n - 1; p <= n + 3; ++p) {
            const std::string tag = "(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ")";
            const Integer rec = nvol_bcc_recursion(n, p);
            t.expect_eq(nvol_pp_ck(n, p), rec, "ck form vs recursion " + tag);
            t.expect_eq(nvol_pp_explicit(n, p), rec, "explicit form vs recursion " + tag);
        }
    return t.result("volume/bcc-conjecture");
}

CheckResult chk_wz() {
    Tally t;
    for (int n = 2; n <= 20; ++n) {
        // wz_difference throws if the telescoping certificate fails anywhere
        t.expect_eq(wz_difference(n), Rational(0), "f(n), n=" + std::to_string(n));
    }
    return t.result("volume/wz-identity");
}

CheckResult chk_closed_vs_recursive() {
    Tally t;
    for (int n = 0; n <= 7; ++n)
        for (Coord a = 1; a <= 4; ++a)
            for (Coord b = 1; b <= 3; ++b) {
                const VolumeResult rec = vol_recursive_generalized(n, a, b);
                if (n == 0) {
                    t.expect_eq(rec.euclidean, Rational(1), "V_0");
                    continue;
                }
                const VolumeResult cf = nvol_closed_form(XpfParams(n, a, b));
                t.expect_eq(cf.normalized, rec.normalized, "closed vs recursive " + grid_tag(n, a, b));
                t.expect_eq(cf.euclidean, rec.euclidean, "euclidean " + grid_tag(n, a, b));
            }
    return t.result("volume/closed-vs-recursive");
}

CheckResult chk_dilation_scaling() {
    Tally t;
    for (int n = 1; n <= 6; ++n)
        for (Coord b = 1; b <= 3; ++b) {
            const Integer bn = int_pow(Integer(b), static_cast<unsigned long>(n));
            t.expect_eq(nvol_closed_form(XpfParams(n, 1, b)).normalized,
                        bn * nvol_closed_form(XpfParams(n, 1, 1)).normalized,
                        "b-dilate of (1,1) " + grid_tag(n, 1, b));
            for (Coord a = 1; a <= 3; ++a)
                t.expect_eq(nvol_closed_form(XpfParams(n, a + (b - 1) * (a - 1), b)).normalized,
                            bn * nvol_closed_form(XpfParams(n, a, 1)).normalized,
                            "b-dilate of (a,1) " + grid_tag(n, a, b));
        }
    return t.result("volume/dilation-scaling");
}

// ---- faces suite -----------------------------------------------------------

CheckResult chk_vertex_count() {
    Tally t;
    for (int n = 1; n <= 7; ++n)
        for (Coord a = 1; a <= 3; ++a)
            for (Coord b = 1; b <= 3; ++b) {
                const XpfParams p(n, a, b);
                t.expect_eq(Integer(xpf_vertices(p).size()), vertex_count_formula(p),
                            "vertex count " + grid_tag(n, a, b));
            }
    return t.result("faces/vertex-count");
}

CheckResult chk_parking_count() {
    Tally t;
    for (int n = 1; n <= 5; ++n)
        for (Coord a = 1; a <= 3; ++a)
            for (Coord b = 1; b <= 3; ++b) {
                const XpfParams p(n, a, b);
                const PointSet pfs = enumerate_x_parking_functions(p);
                t.expect_eq(Integer(pfs.size()), count_x_parking_functions(p),
                            "parking count " + grid_tag(n, a, b));
                // the polytope contains its defining set
                bool all_in = true;
                for (const LatticePoint& f : pfs)
                    if (!xpf_membership(p, 1, f)) {
                        all_in = false;
                        break;
                    }
                t.expect(all_in, [&] { return "membership rejects a parking function " + grid_tag(n, a, b); });
            }
    return t.result("faces/parking-count");
}

CheckResult chk_f_vector_oracle() {
    Tally t;
    for (int n = 1; n <= 4; ++n)
        for (Coord a = 1; a <= 2; ++a)
            for (Coord b = 1; b <= 2; ++b) {
                if (n == 1 && a == 1) continue;  // the polytope degenerates to a point
                const XpfParams p(n, a, b);
                t.expect_eq(brute_force_faces(p), f_vector_formula(p), "f-vector " + grid_tag(n, a, b));
            }
    return t.result("faces/f-vector-oracle");
}

CheckResult chk_euler() {
    Tally t;
    for (int n = 1; n <= 10; ++n)
        for (Coord a = 1; a <= 2; ++a)
            for (Coord b = 1; b <= 2; ++b) {
                if (n == 1 && a == 1) continue;
                const FVector f = f_vector_formula(XpfParams(n, a, b));
                Integer alt = 0;
                for (int k = 0; k <= n; ++k)
                    alt += (k % 2 == 0 ? 1 : -1) * f[static_cast<size_t>(k)];
                t.expect_eq(alt, Integer(1), "Euler relation " + grid_tag(n, a, b));
                t.expect_eq(f[static_cast<size_t>(n)], Integer(1), "top face " + grid_tag(n, a, b));
            }
    return t.result("faces/euler-relation");
}

CheckResult chk_facet_census() {
    Tally t;
    for (int n = 2; n <= 4; ++n) {
        const auto [pf, perm] = permutahedron_facet_census(n);
        t.expect_eq(pf, n, "embedded PF copies, n=" + std::to_string(n));
        t.expect_eq(perm, 1, "permutahedron copies, n=" + std::to_string(n));
    }
    return t.result("faces/facet-census");
}

CheckResult chk_edge_count_oracle() {
    Tally t;
    for (int n = 2; n <= 4; ++n)
        for (Coord a = 1; a <= 2; ++a) {
            const XpfParams p(n, a, 1);
            const FVector f = brute_force_faces(p);
            t.expect_eq(f[1], edge_count_formula(p), "edges " + grid_tag(n, a, 1));
            t.expect_eq(f[0], vertex_count_formula(p), "vertices " + grid_tag(n, a, 1));
            t.expect_eq(f[static_cast<size_t>(n - 1)], facet_count_formula(p),
                        "facets " + grid_tag(n, a, 1));
        }
    return t.result("faces/edge-count-oracle");
}

CheckResult chk_comb_equivalence() {
    Tally t;
    for (int n = 1; n <= 6; ++n) {
        const FVector ref1 = f_vector_formula(XpfParams(n, 1, 1));
        for (Coord b = 2; b <= 3; ++b)
            t.expect_eq(f_vector_formula(XpfParams(n, 1, b)), ref1, "a=1 class " + grid_tag(n, 1, b));
        const FVector ref2 = f_vector_formula(XpfParams(n, 2, 1));
        for (Coord a = 2; a <= 3; ++a)
            for (Coord b = 1; b <= 3; ++b)
                t.expect_eq(f_vector_formula(XpfParams(n, a, b)), ref2, "a>1 class " + grid_tag(n, a, b));
    }
    // oracle-level spot checks that the face counts, not just the formulas, agree
    t.expect_eq(brute_force_faces(XpfParams(3, 1, 1)), brute_force_faces(XpfParams(3, 1, 3)),
                "oracle a=1 class (n=3)");
    t.expect_eq(brute_force_faces(XpfParams(3, 2, 1)), brute_force_faces(XpfParams(3, 3, 2)),
                "oracle a>1 class (n=3)");
    return t.result("faces/combinatorial-equivalence");
}

CheckResult chk_vertex_certificate() {
    Tally t;
    for (int n = 1; n <= 5; ++n)
        for (Coord a = 1; a <= 3; ++a)
            for (Coord b = 1; b <= 2; ++b) {
                const XpfParams p(n, a, b);
                const ConstraintSystem sys = xpf_constraints(p);
                for (const LatticePoint& v : xpf_vertices(p)) {
                    t.expect(is_x_parking_function(p, v),
                             [&] { return "vertex not a parking function " + grid_tag(n, a, b); });
                    t.expect(xpf_membership(p, 1, v),
                             [&] { return "vertex outside polytope " + grid_tag(n, a, b); });
                    const auto rows = symmetric_tight_normals(sys, v, false);
                    t.expect(static_cast<int>(rows.size()) >= n, [&] {
                        return "fewer than n tight constraints " + grid_tag(n, a, b);
                    });
                    t.expect_eq(normal_rank(rows, n), n, "tight rank " + grid_tag(n, a, b));
                    if (a > 1)
                        t.expect_eq(static_cast<int>(rows.size()), n,
                                    "simple vertex (a>1) " + grid_tag(n, a, b));
                }
            }
    return t.result("faces/vertex-certificate");
}

CheckResult chk_redundant_bound() {
    Tally t;
    for (int n = 2; n <= 5; ++n)
        for (Coord b = 1; b <= 2; ++b) {
            const XpfParams p(n, 1, b);
            const ConstraintSystem full = xpf_constraints(p);
            ConstraintSystem stripped = full;
            stripped.cardinality_bounds.erase(n - 1);
            stripped.redundant.erase(n - 1);
            const Coord hi = 1 + (n - 1) * b;
            LatticePoint v(static_cast<size_t>(n), 1);
            long same = 0, differ = 0;
            std::function<void(int)> rec = [&](int i) {
                if (i == n) {
                    if (contains(full, 1, v) == contains(stripped, 1, v))
                        ++same;
                    else
                        ++differ;
                    return;
                }
                for (Coord x = 1; x <= hi; ++x) {
                    v[static_cast<size_t>(i)] = x;
                    rec(i + 1);
                }
            };
            rec(0);
            t.expect_eq(differ, 0L, "redundant k=n-1 bound changes the set " + grid_tag(n, 1, b));
        }
    return t.result("faces/redundant-bound");
}

CheckResult chk_pp_equivalence() {
    Tally t;
    for (int n = 1; n <= 6; ++n) {
        PointSet shifted;
        for (const LatticePoint& v : pp_vertices(n, n - 1)) {
            LatticePoint w = v;
            for (Coord& c : w) c += 1;
            shifted.insert(std::move(w));
        }
        t.expect(shifted == xpf_vertices(XpfParams(n, 1, 1)),
                 [&] { return "P(n,n-1)+1 != X_n(1,1) at n=" + std::to_string(n); });
    }
    for (int n = 1; n <= 5; ++n)
        for (Coord p = n - 1; p <= n + 2; ++p) {
            const XpfParams q = xpf_pp_equivalence(n, p);
            PointSet shifted;
            for (const LatticePoint& v : pp_vertices(n, p)) {
                LatticePoint w = v;
                for (Coord& c : w) c += 1;
                shifted.insert(std::move(w));
            }
            t.expect(shifted == xpf_vertices(q), [&] {
                return "P(" + std::to_string(n) + "," + std::to_string(p) + ")+1 != X" +
                       grid_tag(q.n, q.a, q.b);
            });
        }
    return t.result("faces/pp-equivalence");
}

CheckResult chk_dilate_map() {
    Tally t;
    for (int n = 1; n <= 5; ++n)
        for (Coord b = 1; b <= 3; ++b) {
            PointSet image;
            for (const LatticePoint& v : xpf_vertices(XpfParams(n, 1, 1)))
                image.insert(dilate_fixing_ones(b, v));
            t.expect(image == xpf_vertices(XpfParams(n, 1, b)),
                     [&] { return "phi_b X(1,1) != X(1,b) " + grid_tag(n, 1, b); });
            for (Coord a = 1; a <= 3; ++a) {
                PointSet img2;
                for (const LatticePoint& v : xpf_vertices(XpfParams(n, a, 1)))
                    img2.insert(dilate_fixing_ones(b, v));
                t.expect(img2 == xpf_vertices(XpfParams(n, a + (b - 1) * (a - 1), b)),
                         [&] { return "phi_b X(a,1) mismatch " + grid_tag(n, a, b); });
            }
        }
    return t.result("faces/dilate-map");
}

// ---- series suite ----------------------------------------------------------

CheckResult chk_functional_equation() {
    Tally t;
    for (Coord b = 1; b <= 5; ++b)
        t.expect(verify_functional_equation(b, 10),
                 [&] { return "g_b != x e^{b g_b} at b=" + std::to_string(b); });
    return t.result("series/functional-equation");
}

CheckResult chk_fab_coefficients() {
    Tally t;
    for (Coord a = 1; a <= 3; ++a)
        for (Coord b = 1; b <= 3; ++b) {
            const PowerSeries f = f_ab_series(a, b, 8);
            for (int n = 0; n <= 8; ++n) {
                const Rational expected =
                    vol_recursive_generalized(n, a, b).euclidean / Rational(factorial(n));
                t.expect_eq(f.coeff(n), expected,
                            "[x^" + std::to_string(n) + "] f_{" + std::to_string(a) + "," +
                                std::to_string(b) + "}");
            }
        }
    return t.result("series/fab-coefficients");
}

CheckResult chk_ck_egf() {
    Tally t;
    t.expect(ck_egf_check(10), [] { return std::string("sqrt(1-2x)e^x EGF check failed"); });
    return t.result("series/ck-egf");
}

// ---- weakly increasing suite ------------------------------------------------

CheckResult chk_wipf_ehrhart() {
    Tally t;
    for (int n = 1; n <= 4; ++n)
        for (Coord a = 1; a <= 3; ++a)
            for (Coord b = 1; b <= 2; ++b) {
                const XpfParams p(n, a, b);
                std::vector<Coord> x(static_cast<size_t>(n), b);
                x[0] = a - 1;
                const ConstraintSystem ps = ps_constraints(x);
                t.expect_eq(wipf_ehrhart_formula(p, 0), Integer(1), "t=0 " + grid_tag(n, a, b));
                for (Coord tt = 1; tt <= 4; ++tt)
                    t.expect_eq(wipf_ehrhart_formula(p, tt), lattice_points_in_dilate(ps, tt),
                                "t=" + std::to_string(tt) + " " + grid_tag(n, a, b));
            }
    return t.result("weakly/wipf-ehrhart");
}

CheckResult chk_catalan_points() {
    Tally t;
    for (int n = 1; n <= 6; ++n)
        t.expect_eq(wipf_ehrhart_formula(XpfParams(n, 1, 1), 1), catalan(n),
                    "C_n at n=" + std::to_string(n));
    return t.result("weakly/catalan-points");
}

CheckResult chk_wipf_volume() {
    Tally t;
    for (int n = 2; n <= 5; ++n) {
        std::vector<Coord> x(static_cast<size_t>(n), 1);
        x[0] = 0;
        const VolumeResult vr = ehrhart_volume_oracle(ps_constraints(x), n - 1);
        t.expect_eq(vr.normalized, nvol_wipf(n), "nvol X^w_n(1,1), n=" + std::to_string(n));
    }
    return t.result("weakly/wipf-volume");
}

CheckResult chk_wipf_face_counts() {
    Tally t;
    for (int n = 2; n <= 5; ++n) {
        const WipfFaceCounts fc = wipf_face_counts(n);
        const PointSet vs = wipf_vertices(XpfParams(n, 1, 1));
        t.expect_eq(Integer(vs.size()), fc.vertices, "wipf vertices, n=" + std::to_string(n));

        // H-description of X^w_n(1,1): x_1 = 1, x_i <= i, x_{i-1} <= x_i.
        // A pair of vertices is an edge iff the vertices tight on their
        // common active constraints are exactly the two of them.
        const std::vector<LatticePoint> verts(vs.begin(), vs.end());
        using Active = std::vector<bool>;
        auto active_set = [&](const LatticePoint& v) {
            Active act;
            for (int i = 1; i < n; ++i) act.push_back(v[static_cast<size_t>(i)] == i + 1);
            for (int i = 1; i < n; ++i)
                act.push_back(v[static_cast<size_t>(i - 1)] == v[static_cast<size_t>(i)]);
            return act;
        };
        std::vector<Active> acts;
        acts.reserve(verts.size());
        for (const auto& v : verts) acts.push_back(active_set(v));
        const size_t m = acts.empty() ? 0 : acts[0].size();
        long edges = 0;
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j) {
                Active common(m);
                for (size_t c = 0; c < m; ++c) common[c] = acts[i][c] && acts[j][c];
                long on_face = 0;
                for (const auto& act : acts) {
                    bool covers = true;
                    for (size_t c = 0; c < m; ++c)
                        if (common[c] && !act[c]) {
                            covers = false;
                            break;
                        }
                    if (covers) ++on_face;
                }
                if (on_face == 2) ++edges;
            }
        t.expect_eq(Integer(edges), fc.edges, "wipf edges, n=" + std::to_string(n));

        // each inequality supports a facet iff its tight vertex set spans
        // dimension n-2 (the polytope itself is (n-1)-dimensional)
        long facets = 0;
        for (size_t c = 0; c < m; ++c) {
            std::vector<LatticePoint> tight;
            for (size_t i = 0; i < verts.size(); ++i)
                if (acts[i][c]) tight.push_back(verts[i]);
            if (!tight.empty() && affine_rank(tight) == n - 2) ++facets;
        }
        t.expect_eq(Integer(facets), fc.facets, "wipf facets, n=" + std::to_string(n));
    }
    return t.result("weakly/wipf-face-counts");
}

CheckResult chk_st_bijection() {
    Tally t;
    for (int n = 1; n <= 5; ++n)
        for (Coord a = 1; a <= 3; ++a)
            for (Coord b = 1; b <= 2; ++b) {
                const XpfParams p(n, a, b);
                std::vector<Coord> x(static_cast<size_t>(n), b);
                x[0] = a - 1;
                const PointSet wi = weakly_increasing_parking_functions(p);
                const PointSet ps = prefix_lattice_points(ps_constraints(x), 1);
                t.expect_eq(wi.size(), ps.size(), "lattice point counts " + grid_tag(n, a, b));
                bool ok = true;
                for (const LatticePoint& w : wi) {
                    const LatticePoint y = wipf_to_ps(w);
                    if (!ps.count(y) || ps_to_wipf(y) != w) {
                        ok = false;
                        break;
                    }
                }
                t.expect(ok, [&] { return "T/S bijection broken " + grid_tag(n, a, b); });
            }
    return t.result("weakly/st-bijection");
}

CheckResult chk_wipf_vertex_certificate() {
    Tally t;
    for (int n = 1; n <= 5; ++n)
        for (Coord a = 1; a <= 3; ++a)
            for (Coord b = 1; b <= 2; ++b) {
                const XpfParams p(n, a, b);
                std::vector<Coord> x(static_cast<size_t>(n), b);
                x[0] = a - 1;
                const ConstraintSystem ps = ps_constraints(x);
                for (const LatticePoint& v : wipf_vertices(p)) {
                    const LatticePoint y = wipf_to_ps(v);
                    t.expect(contains(ps, 1, y),
                             [&] { return "claimed vertex outside PS image " + grid_tag(n, a, b); });
                    // rank-n certificate: tight rows among y_i >= 0 and the
                    // prefix bounds pin y as a zero-dimensional face
                    std::vector<std::vector<int>> rows;
                    Coord prefix = 0;
                    for (int i = 0; i < n; ++i) {
                        if (y[static_cast<size_t>(i)] == 0) {
                            std::vector<int> e(static_cast<size_t>(n), 0);
                            e[static_cast<size_t>(i)] = 1;
                            rows.push_back(std::move(e));
                        }
                        prefix += y[static_cast<size_t>(i)];
                        if (prefix == ps.prefix_bounds[static_cast<size_t>(i)]) {
                            std::vector<int> r(static_cast<size_t>(n), 0);
                            for (int j = 0; j <= i; ++j) r[static_cast<size_t>(j)] = 1;
                            rows.push_back(std::move(r));
                        }
                    }
                    t.expect_eq(normal_rank(rows, n), n, "wipf vertex rank " + grid_tag(n, a, b));
                }
            }
    return t.result("weakly/wipf-vertex-certificate");
}

// ---- rational suite ----------------------------------------------------------

CheckResult chk_rational_vertex_count() {
    Tally t;
    for (Coord a = 1; a <= 6; ++a)
        for (Coord b = 1; b <= 9; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const std::string tag = "(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")";
            t.expect_eq(rational_vertex_count(a, b), Integer(rational_pf_vertices(a, b).size()),
                        "vertex count " + tag);
        }
    return t.result("rational/vertex-count-oracle");
}

CheckResult chk_rational_path_count() {
    Tally t;
    for (Coord a = 1; a <= 5; ++a)
        for (Coord b = 1; b <= 7; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const std::string tag = "(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")";
            t.expect_eq(count_rational_parking_functions_paths(a, b),
                        int_pow(Integer(b), static_cast<unsigned long>(a - 1)),
                        "labeled paths vs b^{a-1} " + tag);
        }
    return t.result("rational/path-count");
}

CheckResult chk_rational_h_description() {
    Tally t;
    for (Coord a = 1; a <= 5; ++a)
        for (Coord b = 1; b <= 8; ++b) {
            if (std::gcd(a, b) != 1) continue;
            if (!(b > a || b == a - 1)) continue;
            const std::string tag = "(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")";
            const ConstraintSystem sys = rational_pf_constraints(a, b);
            for (const LatticePoint& v : rational_pf_vertices(a, b)) {
                t.expect(contains(sys, 1, v),
                         [&] { return "vertex violates H-description " + tag; });
                const auto rows = symmetric_tight_normals(sys, v, true);
                t.expect_eq(normal_rank(rows, static_cast<int>(a)), static_cast<int>(a),
                            "vertex rank " + tag);
            }
        }
    return t.result("rational/h-description-certificate");
}

struct NamedCheck {
    const char* suite;
    const char* name;
    CheckResult (*fn)();
};

const std::vector<NamedCheck>& registry() {
    static const std::vector<NamedCheck> checks = {
        {"volume", "volume/published-sequence", chk_published_sequence},
        {"volume", "volume/five-way-equality", chk_five_way},
        {"volume", "volume/permanent-census", chk_permanent_census},
        {"volume", "volume/ehrhart-oracle-grid", chk_ehrhart_oracle_grid},
        {"volume", "volume/bcc-conjecture", chk_bcc_conjecture},
        {"volume", "volume/wz-identity", chk_wz},
        {"volume", "volume/closed-vs-recursive", chk_closed_vs_recursive},
        {"volume", "volume/dilation-scaling", chk_dilation_scaling},
        {"faces", "faces/vertex-count", chk_vertex_count},
        {"faces", "faces/parking-count", chk_parking_count},
        {"faces", "faces/f-vector-oracle", chk_f_vector_oracle},
        {"faces", "faces/euler-relation", chk_euler},
        {"faces", "faces/facet-census", chk_facet_census},
        {"faces", "faces/edge-count-oracle", chk_edge_count_oracle},
        {"faces", "faces/combinatorial-equivalence", chk_comb_equivalence},
        {"faces", "faces/vertex-certificate", chk_vertex_certificate},
        {"faces", "faces/redundant-bound", chk_redundant_bound},
        {"faces", "faces/pp-equivalence", chk_pp_equivalence},
        {"faces", "faces/dilate-map", chk_dilate_map},
        {"series", "series/functional-equation", chk_functional_equation},
        {"series", "series/fab-coefficients", chk_fab_coefficients},
        {"series", "series/ck-egf", chk_ck_egf},
        {"weakly", "weakly/wipf-ehrhart", chk_wipf_ehrhart},
        {"weakly", "weakly/catalan-points", chk_catalan_points},
        {"weakly", "weakly/wipf-volume", chk_wipf_volume},
        {"weakly", "weakly/wipf-face-counts", chk_wipf_face_counts},
        {"weakly", "weakly/st-bijection", chk_st_bijection},
        {"weakly", "weakly/wipf-vertex-certificate", chk_wipf_vertex_certificate},
        {"rational", "rational/vertex-count-oracle", chk_rational_vertex_count},
        {"rational", "rational/path-count", chk_rational_path_count},
        {"rational", "rational/h-description-certificate", chk_rational_h_description},
    };
    return checks;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"volume", "faces", "series", "weakly", "rational"};
}

std::vector<CheckResult> run_suite(const std::string& suite) {
    bool known = suite == "all";
    for (const auto& s : suite_names()) known = known || s == suite;
    if (!known) throw std::domain_error("unknown suite: " + suite);
    std::vector<CheckResult> out;
    for (const auto& c : registry())
        if (suite == "all" || suite == c.suite) out.push_back(c.fn());
    return out;
}

CheckResult run_check(const std::string& name) {
    for (const auto& c : registry())
        if (name == c.name) return c.fn();
    throw std::domain_error("unknown check: " + name);
}

}  // namespace parkpoly
