#include "parkpoly/counting.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "parkpoly/matrix.hpp"
#include "parkpoly/numeric.hpp"
#include "parkpoly/parallel.hpp"

namespace parkpoly {

Integer count_x_parking_functions(const XpfParams& p) {
    return p.a * int_pow(Integer(p.a + p.n * p.b), static_cast<unsigned long>(p.n - 1));
}

PointSet enumerate_x_parking_functions(const XpfParams& p) {
    PointSet out;
    LatticePoint asc(static_cast<size_t>(p.n));
    // enumerate weakly increasing representatives, then expand orbits
    std::function<void(int, Coord)> rec = [&](int i, Coord lo) {
        if (i == p.n) {
            const PointSet perms = all_permutations(asc);
            out.insert(perms.begin(), perms.end());
            return;
        }
        for (Coord v = lo; v <= p.a + i * p.b; ++v) {
            asc[static_cast<size_t>(i)] = v;
            rec(i + 1, v);
        }
    };
    rec(0, 1);
    return out;
}

Integer vertex_count_formula(const XpfParams& p) {
    Integer total = 0;
    const int k_lo = p.a == 1 ? 1 : 0;
    for (int k = k_lo; k <= p.n; ++k) total += factorial(p.n) / factorial(k);
    return total;
}

Integer facet_count_formula(const XpfParams& p) {
    if (p.n < 2)
        throw std::domain_error(
            "facet_count_formula: stated for n >= 2 only (n = 1 is a segment with 2 facets)");
    const Integer base = int_pow(2, static_cast<unsigned long>(p.n)) - 1;
    return p.a == 1 ? base : base + p.n;
}

Integer edge_count_formula(const XpfParams& p) {
    const Integer twice = p.n * vertex_count_formula(p);
    if (twice % 2 != 0)
        throw std::logic_error("edge_count_formula: n * vertex count is odd");
    return twice / 2;
}

FVector f_vector_formula(const XpfParams& p) {
    FVector f(static_cast<size_t>(p.n) + 1);
    for (int k = 0; k <= p.n; ++k) {
        Integer sum = 0;
        for (int m = 0; m <= p.n - k; ++m) {
            if (m == 1 && p.a == 1) continue;
            sum += binomial(p.n, m) * factorial(p.n - k - m) *
                   stirling2(p.n - m + 1, p.n - k - m + 1);
        }
        f[static_cast<size_t>(k)] = sum;
    }
    return f;
}

namespace {

using Mask = std::array<std::uint64_t, 2>;

struct MaskHash {
    std::size_t operator()(const Mask& m) const {
        return std::hash<std::uint64_t>()(m[0]) ^ (std::hash<std::uint64_t>()(m[1]) * 0x9e3779b97f4a7c15ULL);
    }
};

// All faces of the polytope as vertex bitmasks: every proper face is an
// intersection of facets, and intersections of facets are faces, so folding
// facet incidence masks over all facet subsets enumerates them exactly.
struct FaceEnumeration {
    std::vector<LatticePoint> vertices;
    std::vector<Mask> faces;  // deduped, nonempty; includes the full mask
};

FaceEnumeration enumerate_faces(const XpfParams& p) {
    if (p.n > 4) throw std::domain_error("face oracle: refusing n > 4 (combinatorial blowup)");
    const PointSet vset = xpf_vertices(p);
    FaceEnumeration fe;
    fe.vertices.assign(vset.begin(), vset.end());
    const size_t nv = fe.vertices.size();
    if (nv > 128) throw std::logic_error("face oracle: vertex mask overflow");

    const ConstraintSystem sys = xpf_constraints(p);
    std::vector<Mask> facet_masks;
    auto tight_mask = [&](auto&& pred) {
        Mask m{0, 0};
        for (size_t i = 0; i < nv; ++i)
            if (pred(fe.vertices[i])) m[i / 64] |= 1ULL << (i % 64);
        return m;
    };
    for (int i = 0; i < p.n; ++i)
        facet_masks.push_back(tight_mask(
            [&](const LatticePoint& v) { return v[static_cast<size_t>(i)] == sys.lower_bounds[static_cast<size_t>(i)]; }));
    for (const auto& [k, rhs] : sys.cardinality_bounds) {
        if (sys.redundant.count(k)) continue;
        // every k-subset of coordinates is its own facet
        std::vector<int> idx(static_cast<size_t>(k));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            facet_masks.push_back(tight_mask([&](const LatticePoint& v) {
                Coord s = 0;
                for (int i : idx) s += v[static_cast<size_t>(i)];
                return s == rhs;
            }));
            int pos = k - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == p.n - k + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (int j = pos + 1; j < k; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }

    const size_t nf = facet_masks.size();
    Mask full{0, 0};
    for (size_t i = 0; i < nv; ++i) full[i / 64] |= 1ULL << (i % 64);

    std::vector<Mask> sub(1ULL << nf);
    sub[0] = full;
    std::unordered_set<Mask, MaskHash> seen;
    seen.insert(full);
    for (std::uint64_t s = 1; s < (1ULL << nf); ++s) {
        const std::uint64_t low = s & (-s);
        const Mask& prev = sub[s ^ low];
        const Mask& fm = facet_masks[static_cast<size_t>(std::countr_zero(low))];
        Mask m{prev[0] & fm[0], prev[1] & fm[1]};
        sub[s] = m;
        if (m[0] | m[1]) seen.insert(m);
    }
    fe.faces.assign(seen.begin(), seen.end());
    return fe;
}

std::vector<LatticePoint> mask_points(const FaceEnumeration& fe, const Mask& m) {
    std::vector<LatticePoint> pts;
    for (size_t i = 0; i < fe.vertices.size(); ++i)
        if (m[i / 64] >> (i % 64) & 1) pts.push_back(fe.vertices[i]);
    return pts;
}

}  // namespace

std::vector<PointSet> brute_force_face_sets(const XpfParams& p) {
    const FaceEnumeration fe = enumerate_faces(p);
    std::vector<PointSet> out;
    out.reserve(fe.faces.size());
    for (const Mask& m : fe.faces) {
        const auto pts = mask_points(fe, m);
        out.emplace_back(pts.begin(), pts.end());
    }
    return out;
}

FVector brute_force_faces(const XpfParams& p) {
    const FaceEnumeration fe = enumerate_faces(p);
    FVector f(static_cast<size_t>(p.n) + 1, Integer(0));
    for (const Mask& m : fe.faces) {
        const int d = affine_rank(mask_points(fe, m));
        f[static_cast<size_t>(d)] += 1;
    }
    return f;
}

std::pair<int, int> permutahedron_facet_census(int n) {
    if (n < 2 || n > 4)
        throw std::domain_error("permutahedron_facet_census: n must be in [2, 4]");
    const std::vector<PointSet> faces = brute_force_face_sets(XpfParams(n, 1, 1));

    LatticePoint staircase(static_cast<size_t>(n));
    std::iota(staircase.begin(), staircase.end(), Coord(1));
    const PointSet perm_target = permutahedron_vertices(staircase);

    std::vector<PointSet> pf_targets;
    const PointSet sub = xpf_vertices(XpfParams(n - 1, 1, 1));
    for (int pin = 0; pin < n; ++pin) {
        PointSet target;
        for (const LatticePoint& v : sub) {
            LatticePoint w = v;
            w.insert(w.begin() + pin, Coord(n));
            target.insert(std::move(w));
        }
        pf_targets.push_back(std::move(target));
    }

    int pf_count = 0, perm_count = 0;
    for (const PointSet& face : faces) {
        if (face == perm_target) ++perm_count;
        for (const PointSet& target : pf_targets)
            if (face == target) ++pf_count;
    }
    return {pf_count, perm_count};
}

namespace {

// weakly decreasing representatives with prefix-sum pruning, weighted by
// orbit size n!/prod(mult!)
Integer symmetric_dilate_count(const ConstraintSystem& sys, Coord t) {
    const int n = sys.n;
    for (const Coord lb : sys.lower_bounds)
        if (lb != sys.lower_bounds[0])
            throw std::domain_error("lattice_points_in_dilate: asymmetric lower bounds");
    if (!sys.cardinality_bounds.count(1) || !sys.cardinality_bounds.count(n))
        throw std::domain_error("lattice_points_in_dilate: need k = 1 and k = n bounds");
    const Coord lo = t * sys.lower_bounds[0];
    const Coord hi = t * sys.cardinality_bounds.at(1);
    if (hi < lo) return 0;

    std::vector<Coord> rhs(static_cast<size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) rhs[static_cast<size_t>(k)] = t * sys.cardinality_bounds.at(k);

    const Integer nfact = factorial(n);
    return parallel_sum(lo, hi + 1, [&](long first) {
        LatticePoint tuple(static_cast<size_t>(n));
        Integer count = 0;
        std::function<void(int, Coord, Coord)> rec = [&](int i, Coord last, Coord prefix) {
            if (i == n) {
                Integer orbit = nfact;
                int run = 1;
                for (int j = 1; j <= n; ++j) {
                    if (j < n && tuple[static_cast<size_t>(j)] == tuple[static_cast<size_t>(j - 1)]) {
                        ++run;
                    } else {
                        orbit /= factorial(run);
                        run = 1;
                    }
                }
                count += orbit;
                return;
            }
            for (Coord v = std::min(last, rhs[static_cast<size_t>(i + 1)] - prefix); v >= lo; --v) {
                // remaining coordinates are at least lo each
                if (prefix + v + (n - 1 - i) * lo > rhs[static_cast<size_t>(n)]) continue;
                tuple[static_cast<size_t>(i)] = v;
                rec(i + 1, v, prefix + v);
            }
        };
        if (first > rhs[1]) return Integer(0);
        if (first + (n - 1) * lo > rhs[static_cast<size_t>(n)]) return Integer(0);
        tuple[0] = first;
        rec(1, first, first);
        return count;
    });
}

Integer prefix_dilate_count(const ConstraintSystem& sys, Coord t) {
    const int n = sys.n;
    Integer count = 0;
    std::function<void(int, Coord)> rec = [&](int i, Coord prefix) {
        if (i == n) {
            count += 1;
            return;
        }
        const Coord lo = t * sys.lower_bounds[static_cast<size_t>(i)];
        const Coord hi = t * sys.prefix_bounds[static_cast<size_t>(i)] - prefix;
        for (Coord v = lo; v <= hi; ++v) rec(i + 1, prefix + v);
    };
    rec(0, 0);
    return count;
}

}  // namespace

Integer lattice_points_in_dilate(const ConstraintSystem& sys, Coord t) {
    if (t < 1) throw std::domain_error("lattice_points_in_dilate: t must be >= 1");
    return sys.kind == ConstraintKind::symmetric ? symmetric_dilate_count(sys, t)
                                                 : prefix_dilate_count(sys, t);
}

Integer wipf_ehrhart_formula(const XpfParams& p, Coord t) {
    if (t < 0) throw std::domain_error("wipf_ehrhart_formula: t must be >= 0");
    Rational prod(Integer(t * (p.a - 1) + 1));
    const Integer stretch = Integer(t) * (p.a - 1 + Coord(p.n) * p.b);
    for (int j = 2; j <= p.n; ++j) prod *= Rational(stretch + j);
    return (prod / Rational(factorial(p.n))).to_integer();
}

Integer rational_vertex_count(Coord a, Coord b) {
    const std::vector<Coord> levels = rational_pf_levels(a, b);
    if (a == 1) return 1;
    if (b > a) {
        Integer total = 0;
        for (Coord k = 1; k <= a; ++k) total += factorial(a) / factorial(k);
        return total;
    }
    // b < a: the published multiplicity sum over level values
    std::vector<Coord> m(static_cast<size_t>(b) + 1, 0);
    for (const Coord v : levels) ++m[static_cast<size_t>(v)];
    Rational sum(0);
    {
        Rational head(1);
        for (Coord i = 1; i <= b; ++i) head /= Rational(factorial(m[static_cast<size_t>(i)]));
        sum += head;
    }
    for (Coord k = 2; k <= b; ++k) {
        Rational tail(1);
        for (Coord j = k + 1; j <= b; ++j) tail /= Rational(factorial(m[static_cast<size_t>(j)]));
        Coord below = 0;
        for (Coord j = 1; j < k; ++j) below += m[static_cast<size_t>(j)];
        Rational mk(0);
        for (Coord i = 1; i <= m[static_cast<size_t>(k)]; ++i)
            mk += Rational(Integer(1), factorial(below + i) * factorial(m[static_cast<size_t>(k)] - i));
        sum += tail * mk;
    }
    return (Rational(factorial(a)) * sum).to_integer();
}

WipfFaceCounts wipf_face_counts(int n) {
    if (n < 2) throw std::domain_error("wipf_face_counts: n must be >= 2");
    WipfFaceCounts c;
    c.facets = 2 * (n - 1);
    c.vertices = int_pow(2, static_cast<unsigned long>(n - 1));
    c.edges = int_pow(2, static_cast<unsigned long>(n - 2)) * (n - 1);
    return c;
}

Integer count_rational_parking_functions_paths(Coord a, Coord b) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1)
        throw std::domain_error("count_rational_parking_functions_paths: need coprime a, b >= 1");
    // Columns x = 0..b take n_x north steps; the east step from x to x+1 at
    // height H_x needs b*H_x >= a*(x+1). A path admits a!/prod(n_x!) label
    // assignments that increase within each column.
    Integer total = 0;
    std::function<void(Coord, Coord, Integer)> rec = [&](Coord x, Coord h, Integer ways) {
        if (x == b) {
            if (h == a) total += ways;
            return;
        }
        for (Coord steps = 0; h + steps <= a; ++steps) {
            const Coord nh = h + steps;
            if (b * nh < a * (x + 1)) continue;  // east step would dip below the diagonal
            rec(x + 1, nh, ways / factorial(steps));
        }
    };
    rec(0, 0, factorial(a));
    return total;
}

}  // namespace parkpoly
