#include "parkpoly/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace parkpoly {

XpfParams::XpfParams(int n_, Coord a_, Coord b_) : n(n_), a(a_), b(b_) {
    if (n < 1) throw std::domain_error("XpfParams: n must be >= 1");
    if (a < 1 || b < 1) throw std::domain_error("XpfParams: a and b must be >= 1");
}

bool contains(const ConstraintSystem& sys, Coord t, const LatticePoint& pt) {
    if (t <= 0) throw std::domain_error("contains: dilation factor must be positive");
    if (static_cast<int>(pt.size()) != sys.n)
        throw std::domain_error("contains: point length does not match system dimension");
    if (sys.kind == ConstraintKind::symmetric) {
        for (int i = 0; i < sys.n; ++i)
            if (pt[i] < t * sys.lower_bounds[i]) return false;
        const LatticePoint d = sorted_descending(pt);
        Coord prefix = 0;
        int k = 1;
        auto it = sys.cardinality_bounds.begin();
        for (const Coord v : d) {
            prefix += v;
            if (it != sys.cardinality_bounds.end() && it->first == k) {
                if (prefix > t * it->second) return false;
                ++it;
            }
            ++k;
        }
        return true;
    }
    Coord prefix = 0;
    for (int i = 0; i < sys.n; ++i) {
        if (pt[i] < t * sys.lower_bounds[i]) return false;
        prefix += pt[i];
        if (prefix > t * sys.prefix_bounds[i]) return false;
    }
    return true;
}

// Layer vector with k ones: (1,...,1, a+kb, a+(k+1)b, ..., a+(n-1)b).
static LatticePoint layer_vector(const XpfParams& p, int k) {
    LatticePoint v(static_cast<size_t>(p.n), 1);
    for (int j = k; j < p.n; ++j) v[static_cast<size_t>(j)] = p.a + j * p.b;
    return v;
}

PointSet xpf_vertices(const XpfParams& p) {
    PointSet out;
    for (int k = 0; k <= p.n; ++k) {
        const PointSet perms = all_permutations(layer_vector(p, k));
        out.insert(perms.begin(), perms.end());
    }
    return out;
}

ConstraintSystem xpf_constraints(const XpfParams& p) {
    ConstraintSystem sys;
    sys.kind = ConstraintKind::symmetric;
    sys.n = p.n;
    sys.lower_bounds.assign(static_cast<size_t>(p.n), 1);
    for (int k = 1; k <= p.n; ++k) {
        // sum of the k largest generator values a+(n-k)b, ..., a+(n-1)b
        sys.cardinality_bounds[k] = k * p.a + p.b * k * (2 * p.n - k - 1) / 2;
    }
    if (p.a == 1 && p.n >= 2) sys.redundant.insert(p.n - 1);
    return sys;
}

bool xpf_membership(const XpfParams& p, Coord t, const LatticePoint& pt) {
    return contains(xpf_constraints(p), t, pt);
}

bool is_x_parking_function(const XpfParams& p, const LatticePoint& pt) {
    if (static_cast<int>(pt.size()) != p.n) return false;
    const LatticePoint s = sorted_ascending(pt);
    for (int i = 0; i < p.n; ++i) {
        if (s[static_cast<size_t>(i)] < 1) return false;
        if (s[static_cast<size_t>(i)] > p.a + i * p.b) return false;
    }
    return true;
}

Layer layer_of(const XpfParams& p, const LatticePoint& v) {
    if (static_cast<int>(v.size()) != p.n) throw std::domain_error("layer_of: wrong length");
    const LatticePoint s = sorted_ascending(v);
    int ones = 0;
    while (ones < p.n && s[static_cast<size_t>(ones)] == 1) ++ones;
    // With the maximal-k reading, a vertex with m coordinates equal to 1 is
    // the k = m layer form; check the tail against it.
    if (s != sorted_ascending(layer_vector(p, ones)))
        throw std::domain_error("layer_of: not a vertex of X_n(a,b)");
    return Layer{p.n - ones};
}

PointSet pp_vertices(int n, Coord p) {
    if (n < 1) throw std::domain_error("pp_vertices: n must be >= 1");
    if (p < 0) throw std::domain_error("pp_vertices: p must be >= 0");
    PointSet out;
    for (Coord k = 0; k <= std::min<Coord>(n, p); ++k) {
        LatticePoint v(static_cast<size_t>(n), 0);
        for (Coord j = 0; j < k; ++j) v[static_cast<size_t>(n - k + j)] = p - k + 1 + j;
        const PointSet perms = all_permutations(v);
        out.insert(perms.begin(), perms.end());
    }
    return out;
}

XpfParams xpf_pp_equivalence(int n, Coord p) {
    if (p < n - 1)
        throw std::domain_error("xpf_pp_equivalence: requires p >= n-1, got p=" +
                                std::to_string(p) + ", n=" + std::to_string(n));
    if (n == 1) return XpfParams(1, p + 1);
    return XpfParams(n, p - n + 2, 1);
}

PointSet permutahedron_vertices(const LatticePoint& r) {
    if (r.empty()) throw std::domain_error("permutahedron_vertices: empty vector");
    return all_permutations(r);
}

PointSet wipf_vertices(const XpfParams& p) {
    PointSet out;
    const std::vector<Coord> starts =
        p.a == 1 ? std::vector<Coord>{1} : std::vector<Coord>{1, p.a};
    for (const Coord v1 : starts) {
        // n-1 binary choices after the start value
        const int choices = p.n - 1;
        for (long mask = 0; mask < (1L << choices); ++mask) {
            LatticePoint v(static_cast<size_t>(p.n));
            v[0] = v1;
            for (int i = 1; i < p.n; ++i)
                v[static_cast<size_t>(i)] =
                    (mask >> (i - 1)) & 1 ? p.a + i * p.b : v[static_cast<size_t>(i - 1)];
            out.insert(std::move(v));
        }
    }
    return out;
}

ConstraintSystem ps_constraints(const std::vector<Coord>& x) {
    if (x.empty()) throw std::domain_error("ps_constraints: empty bound vector");
    for (const Coord xi : x)
        if (xi < 0) throw std::domain_error("ps_constraints: negative entry");
    ConstraintSystem sys;
    sys.kind = ConstraintKind::prefix;
    sys.n = static_cast<int>(x.size());
    sys.lower_bounds.assign(x.size(), 0);
    sys.prefix_bounds.resize(x.size());
    std::partial_sum(x.begin(), x.end(), sys.prefix_bounds.begin());
    return sys;
}

LatticePoint wipf_to_ps(const LatticePoint& pt) {
    if (pt.empty()) throw std::domain_error("wipf_to_ps: empty point");
    LatticePoint y(pt.size());
    y[0] = pt[0] - 1;
    for (size_t i = 1; i < pt.size(); ++i) y[i] = pt[i] - pt[i - 1];
    return y;
}

LatticePoint ps_to_wipf(const LatticePoint& pt) {
    if (pt.empty()) throw std::domain_error("ps_to_wipf: empty point");
    LatticePoint x(pt.size());
    Coord acc = 1;
    for (size_t i = 0; i < pt.size(); ++i) {
        acc += pt[i];
        x[i] = acc;
    }
    return x;
}

std::vector<Coord> rational_pf_levels(Coord a, Coord b) {
    if (a < 1 || b < 1) throw std::domain_error("rational_pf_levels: a, b must be >= 1");
    if (std::gcd(a, b) != 1)
        throw std::domain_error("rational_pf_levels: a and b must be coprime");
    std::vector<Coord> levels(static_cast<size_t>(a));
    levels[0] = 1;
    for (Coord i = 2; i <= a; ++i)
        levels[static_cast<size_t>(i - 1)] = (b * (i - 1) + a - 1) / a;  // ceil(b(i-1)/a)
    return levels;
}

PointSet rational_pf_vertices(Coord a, Coord b) {
    const std::vector<Coord> levels = rational_pf_levels(a, b);
    PointSet out;
    for (Coord k = 1; k <= a; ++k) {
        LatticePoint v(static_cast<size_t>(a), 1);
        for (Coord j = k; j < a; ++j) v[static_cast<size_t>(j)] = levels[static_cast<size_t>(j)];
        const PointSet perms = all_permutations(v);
        out.insert(perms.begin(), perms.end());
    }
    return out;
}

ConstraintSystem rational_pf_constraints(Coord a, Coord b) {
    const std::vector<Coord> levels = rational_pf_levels(a, b);
    if (!(b > a || b == a - 1))
        throw std::domain_error(
            "rational_pf_constraints: H-description only available for b > a or b = a-1");
    ConstraintSystem sys;
    sys.kind = ConstraintKind::symmetric;
    sys.n = static_cast<int>(a);
    sys.lower_bounds.assign(static_cast<size_t>(a), 1);
    Coord suffix = 0;
    for (Coord k = 1; k <= a; ++k) {
        suffix += levels[static_cast<size_t>(a - k)];
        sys.cardinality_bounds[static_cast<int>(k)] = suffix;
    }
    // Dropping the smallest level (always 1) from the full sum reproduces the
    // k = a-1 bound, so it supports no facet; for b = a-1 the second level is
    // also 1 and k = a-2 degenerates the same way.
    if (a >= 2) sys.redundant.insert(static_cast<int>(a - 1));
    if (b == a - 1 && a >= 3) sys.redundant.insert(static_cast<int>(a - 2));
    return sys;
}

LatticePoint dilate_fixing_ones(Coord d, const LatticePoint& pt) {
    if (d < 1) throw std::domain_error("dilate_fixing_ones: d must be >= 1");
    LatticePoint out(pt.size());
    for (size_t i = 0; i < pt.size(); ++i) out[i] = d * (pt[i] - 1) + 1;
    return out;
}

}  // namespace parkpoly
