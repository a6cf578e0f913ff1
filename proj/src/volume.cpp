#include "parkpoly/volume.hpp"

#include <array>
#include <functional>
#include <stdexcept>
#include <utility>

#include "parkpoly/counting.hpp"
#include "parkpoly/numeric.hpp"
#include "parkpoly/parallel.hpp"
#include "parkpoly/polynomial.hpp"

namespace parkpoly {

namespace {

Integer to_nonnegative_integer(const Rational& v, const char* what) {
    const Integer n = v.to_integer();
    if (n < 0) throw std::logic_error(std::string(what) + ": negative value " + n.get_str());
    return n;
}

}  // namespace

VolumeResult nvol_closed_form(const XpfParams& p) {
    const Rational base = Rational(2 * Coord(p.n) - 1) + Rational(Integer(2 * p.a - 2), Integer(p.b));
    Rational sum(0);
    for (int i = 0; i <= p.n; ++i)
        sum += Rational(binomial(p.n, i) * odd_double_factorial(2L * i - 3)) *
               rat_pow(base, p.n - i);
    const Rational nvol =
        Rational(-1) * Rational(factorial(p.n)) * rat_pow(Rational(Integer(p.b), Integer(2)), p.n) * sum;
    const Integer normalized = to_nonnegative_integer(nvol, "nvol_closed_form");
    return {Rational(normalized, factorial(p.n)), normalized, "closed-form"};
}

VolumeResult vol_recursive_generalized(int n, Coord a, Coord b) {
    if (n < 0) throw std::domain_error("vol_recursive_generalized: n must be >= 0");
    if (a < 1 || b < 1) throw std::domain_error("vol_recursive_generalized: a, b must be >= 1");
    std::vector<Rational> v(static_cast<size_t>(n) + 1);
    v[0] = Rational(1);
    for (int m = 1; m <= n; ++m) {
        Rational sum(0);
        for (int k = 0; k < m; ++k) {
            const Integer pow = int_pow(Integer(b * (m - k)), static_cast<unsigned long>(m - k - 1));
            const Rational weight(Integer(Coord(m) * b + Coord(k) * b - b + 2 * a - 2), Integer(2));
            sum += Rational(binomial(m, k) * pow) * weight * v[static_cast<size_t>(k)];
        }
        v[static_cast<size_t>(m)] = sum / Rational(m);
    }
    const Rational eu = v[static_cast<size_t>(n)];
    return {eu, to_nonnegative_integer(eu * Rational(factorial(n)), "vol_recursive_generalized"),
            "recursive"};
}

Integer nvol_aw_recursion(int n) {
    if (n < 0) throw std::domain_error("nvol_aw_recursion: n must be >= 0");
    std::vector<Rational> nv(static_cast<size_t>(n) + 1);
    nv[0] = Rational(1);
    if (n >= 1) nv[1] = Rational(0);
    for (int m = 2; m <= n; ++m) {
        Rational sum(0);
        for (int k = 0; k < m; ++k) {
            const Integer pow = int_pow(Integer(m - k), static_cast<unsigned long>(m - k - 1));
            sum += Rational(binomial(m, k) * pow) * Rational(Integer(m + k - 1), Integer(2)) *
                   nv[static_cast<size_t>(k)] / Rational(factorial(k));
        }
        nv[static_cast<size_t>(m)] = Rational(factorial(m - 1)) * sum;
    }
    return to_nonnegative_integer(nv[static_cast<size_t>(n)], "nvol_aw_recursion");
}

Integer nvol_bcc_recursion(int n, Coord p) {
    if (n < 0) throw std::domain_error("nvol_bcc_recursion: n must be >= 0");
    if (p < n - 1) throw std::domain_error("nvol_bcc_recursion: stated only for p >= n-1");
    const Coord d = p - n;  // invariant along the recursion: P(n-k, p-k)
    std::vector<Rational> val(static_cast<size_t>(n) + 1);
    val[0] = Rational(1);
    for (int m = 1; m <= n; ++m) {
        const Coord pm = m + d;
        Rational sum(0);
        for (int k = 1; k <= m; ++k) {
            const Rational kpow = rat_pow(Rational(k), k - 2);  // k = 1 gives 1^{-1}
            sum += kpow * val[static_cast<size_t>(m - k)] / Rational(factorial(m - k)) *
                   Rational(Integer(Coord(k) * pm - Coord(k) * (k - 1) / 2)) *
                   Rational(binomial(m, k));
        }
        val[static_cast<size_t>(m)] = Rational(factorial(m - 1)) * sum;
    }
    return to_nonnegative_integer(val[static_cast<size_t>(n)], "nvol_bcc_recursion");
}

Integer nvol_shephard_iv(int n) {
    if (n < 2) throw std::domain_error("nvol_shephard_iv: stated for n >= 2");
    Rational sum(0);
    for (int i = 0; i <= n; ++i)
        sum += Rational(Integer(2 * i - 1) * odd_double_factorial(2L * i - 1) * binomial(n, i)) *
               rat_pow(Rational(2 * Coord(n) - 1), n - i - 1);
    const Rational v = Rational(factorial(n), int_pow(2, static_cast<unsigned long>(n))) * sum;
    return to_nonnegative_integer(v, "nvol_shephard_iv");
}

Integer nvol_shephard_v(int n) {
    if (n < 2) throw std::domain_error("nvol_shephard_v: stated for n >= 2");
    Rational sum(0);
    for (int i = 0; i <= n - 2; ++i)
        sum += Rational(odd_double_factorial(2L * i + 1) * binomial(n - 2, i) *
                        int_pow(Integer(2 * n - 1), static_cast<unsigned long>(n - i - 2)));
    const Rational v = Rational(factorial(n) * (n - 1), int_pow(2, static_cast<unsigned long>(n - 1))) * sum;
    return to_nonnegative_integer(v, "nvol_shephard_v");
}

Integer count_permanent_positive(int n) {
    if (n < 1 || n > 6)
        throw std::domain_error("count_permanent_positive: enumeration guarded to 1 <= n <= 6");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const long np = static_cast<long>(pairs.size());
    if (np == 0) return 0;  // n = 1 admits no row with two 1's

    // permanent > 0 iff the rows, read as edges on the column set, admit an
    // orientation with all in-degrees <= 1: every component unicyclic
    auto positive = [&](const std::vector<int>& choice) {
        std::array<int, 6> parent{}, vcnt{}, ecnt{};
        for (int c = 0; c < n; ++c) parent[c] = c, vcnt[c] = 1, ecnt[c] = 0;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const int pi : choice) {
            const int ru = find(pairs[static_cast<size_t>(pi)].first);
            const int rv = find(pairs[static_cast<size_t>(pi)].second);
            if (ru == rv) {
                ++ecnt[ru];
            } else {
                parent[rv] = ru;
                vcnt[ru] += vcnt[rv];
                ecnt[ru] += ecnt[rv] + 1;
            }
        }
        for (int c = 0; c < n; ++c)
            if (find(c) == c && ecnt[c] != vcnt[c]) return false;
        return true;
    };

    return parallel_sum(0, np, [&](long first) {
        std::vector<int> choice(static_cast<size_t>(n));
        choice[0] = static_cast<int>(first);
        Integer count = 0;
        std::function<void(int)> rec = [&](int row) {
            if (row == n) {
                if (positive(choice)) count += 1;
                return;
            }
            for (int pi = 0; pi < np; ++pi) {
                choice[static_cast<size_t>(row)] = pi;
                rec(row + 1);
            }
        };
        rec(1);
        return count;
    });
}

namespace {

Rational wz_term(int n, long i) {
    if (i < 0) return Rational(0);
    const Integer num = binomial(n, i) * factorial(2 * i) *
                        (Integer(2 * i - 1) * (2 * i - 1) + (2 * n - 1));
    const Integer den = int_pow(2, static_cast<unsigned long>(i)) * factorial(i) * (2 * i - 1);
    return Rational(num, den) * rat_pow(Rational(2L * n - 1), n - i - 1);
}

Rational wz_g(int n, long i) {
    // G(n,i) = R(n,i) F(n,i), R(n,i) = (-2n+1) i / (2i^2 - 2i + n)
    return Rational(Integer((-2L * n + 1) * i), Integer(2 * i * i - 2 * i + n)) * wz_term(n, i);
}

}  // namespace

Rational wz_difference(int n) {
    if (n < 2) throw std::domain_error("wz_difference: stated for n >= 2");
    Rational sum(0);
    for (int i = 0; i <= n; ++i) {
        const Rational f = wz_term(n, i);
        sum += f;
        if (!f.is_zero() && wz_g(n, i + 1) - wz_g(n, i) != f)
            throw std::logic_error("wz_difference: telescoping certificate failed at i=" +
                                   std::to_string(i));
    }
    return sum;
}

CkSequence ck_sequence(int N) {
    if (N < 0) throw std::domain_error("ck_sequence: N must be >= 0");
    CkSequence seq;
    seq.values.resize(static_cast<size_t>(N) + 1);
    seq.values[0] = 1;
    if (N >= 1) seq.values[1] = 0;  // fixed by the EGF sqrt(1-2x) e^x
    for (int k = 2; k <= N; ++k)
        seq.values[static_cast<size_t>(k)] =
            2 * (k - 1) * (seq.values[static_cast<size_t>(k - 1)] - seq.values[static_cast<size_t>(k - 2)]);
    return seq;
}

Integer nvol_pp_ck(int n, Coord p) {
    if (n < 0) throw std::domain_error("nvol_pp_ck: n must be >= 0");
    if (p < n - 1) throw std::domain_error("nvol_pp_ck: stated only for p >= n-1");
    const CkSequence ck = ck_sequence(n);
    Rational sum(0);
    for (int k = 0; k <= n; ++k)
        sum += Rational(binomial(n, k) * ck.values[static_cast<size_t>(k)],
                        int_pow(2, static_cast<unsigned long>(k))) *
               rat_pow(Rational(p), n - k);
    return to_nonnegative_integer(Rational(factorial(n)) * sum, "nvol_pp_ck");
}

Integer nvol_pp_explicit(int n, Coord p) {
    if (n < 0) throw std::domain_error("nvol_pp_explicit: n must be >= 0");
    if (p < n - 1) throw std::domain_error("nvol_pp_explicit: stated only for p >= n-1");
    Rational sum(0);
    for (int i = 0; i <= n; ++i)
        sum += Rational(binomial(n, i) * odd_double_factorial(2L * i - 3) *
                        int_pow(Integer(2 * p + 1), static_cast<unsigned long>(n - i)));
    const Rational v =
        Rational(-1) * Rational(factorial(n), int_pow(2, static_cast<unsigned long>(n))) * sum;
    return to_nonnegative_integer(v, "nvol_pp_explicit");
}

VolumeResult ehrhart_volume_oracle(const ConstraintSystem& sys, int dim) {
    if (dim < 0) throw std::domain_error("ehrhart_volume_oracle: dim must be >= 0");
    if (lattice_points_in_dilate(sys, 1) < 1)
        throw std::domain_error("ehrhart_volume_oracle: empty polytope");
    std::vector<std::pair<Rational, Rational>> pts;
    pts.reserve(static_cast<size_t>(dim) + 1);
    pts.emplace_back(Rational(0), Rational(1));  // ehr(0) = 1 for a nonempty lattice polytope
    for (Coord t = 1; t <= dim; ++t)
        pts.emplace_back(Rational(t), Rational(lattice_points_in_dilate(sys, t)));
    const Polynomial ehr = lagrange_interpolate(pts);
    if (ehr.degree() > dim)
        throw std::logic_error("ehrhart_volume_oracle: interpolated degree exceeds dim");
    const Rational lead = ehr.coeff(static_cast<size_t>(dim));
    return {lead, to_nonnegative_integer(lead * Rational(factorial(dim)), "ehrhart_volume_oracle"),
            "ehrhart-oracle"};
}

Integer nvol_wipf(int n) {
    if (n < 2) throw std::domain_error("nvol_wipf: n must be >= 2");
    return int_pow(Integer(n), static_cast<unsigned long>(n - 2));
}

}  // namespace parkpoly
