#include "parkpoly/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "parkpoly/numeric.hpp"
#include "parkpoly/volume.hpp"

namespace parkpoly {

PowerSeries::PowerSeries(int order) : order_(order) {
    if (order < 0) throw std::domain_error("PowerSeries: negative order");
    c_.resize(static_cast<size_t>(order) + 1);
}

PowerSeries PowerSeries::x(int order) {
    PowerSeries s(order);
    if (order >= 1) s.set_coeff(1, Rational(1));
    return s;
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
    PowerSeries s(order);
    s.set_coeff(0, c);
    return s;
}

const Rational& PowerSeries::coeff(int i) const {
    if (i < 0 || i > order_)
        throw std::out_of_range("PowerSeries: coefficient beyond truncation order");
    return c_[static_cast<size_t>(i)];
}

void PowerSeries::set_coeff(int i, const Rational& v) {
    if (i < 0 || i > order_)
        throw std::out_of_range("PowerSeries: coefficient beyond truncation order");
    c_[static_cast<size_t>(i)] = v;
}

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) r.set_coeff(i, a.coeff(i) + b.coeff(i));
    return r;
}

PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) r.set_coeff(i, a.coeff(i) - b.coeff(i));
    return r;
}

PowerSeries ps_scale(const Rational& s, const PowerSeries& a) {
    PowerSeries r(a.order());
    for (int i = 0; i <= r.order(); ++i) r.set_coeff(i, s * a.coeff(i));
    return r;
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) {
        Rational s(0);
        for (int i = 0; i <= k; ++i) s += a.coeff(i) * b.coeff(k - i);
        r.set_coeff(k, s);
    }
    return r;
}

PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g) {
    if (!g.coeff(0).is_zero())
        throw std::domain_error("ps_compose: inner series must have zero constant term");
    const int ord = std::min(f.order(), g.order());
    // Horner from the top coefficient down; every product truncates at ord
    PowerSeries r = PowerSeries::constant(f.coeff(ord), ord);
    PowerSeries gt(ord);
    for (int i = 0; i <= ord; ++i) gt.set_coeff(i, g.coeff(i));
    for (int k = ord - 1; k >= 0; --k) {
        r = ps_mul(r, gt);
        r.set_coeff(0, r.coeff(0) + f.coeff(k));
    }
    return r;
}

PowerSeries ps_exp(const PowerSeries& f) {
    if (!f.coeff(0).is_zero())
        throw std::domain_error("ps_exp: series must have zero constant term");
    PowerSeries h(f.order());
    h.set_coeff(0, Rational(1));
    // h' = f' h  =>  n h_n = sum_{j=1}^{n} j f_j h_{n-j}
    for (int n = 1; n <= f.order(); ++n) {
        Rational s(0);
        for (int j = 1; j <= n; ++j) s += Rational(j) * f.coeff(j) * h.coeff(n - j);
        h.set_coeff(n, s / Rational(n));
    }
    return h;
}

PowerSeries ps_sqrt(const PowerSeries& f) {
    if (f.coeff(0) != Rational(1))
        throw std::domain_error("ps_sqrt: series must have constant term 1");
    PowerSeries h(f.order());
    h.set_coeff(0, Rational(1));
    for (int n = 1; n <= f.order(); ++n) {
        Rational s = f.coeff(n);
        for (int j = 1; j < n; ++j) s -= h.coeff(j) * h.coeff(n - j);
        h.set_coeff(n, s / Rational(2));
    }
    return h;
}

PowerSeries ps_derive(const PowerSeries& f) {
    if (f.order() < 1) throw std::domain_error("ps_derive: order too small to differentiate");
    PowerSeries r(f.order() - 1);
    for (int i = 0; i <= r.order(); ++i) r.set_coeff(i, Rational(i + 1) * f.coeff(i + 1));
    return r;
}

PowerSeries ps_integrate(const PowerSeries& f) {
    PowerSeries r(f.order() + 1);
    for (int i = 0; i <= f.order(); ++i) r.set_coeff(i + 1, f.coeff(i) / Rational(i + 1));
    return r;
}

PowerSeries ps_shift(const PowerSeries& f, int j) {
    if (j < 0) throw std::domain_error("ps_shift: negative shift");
    PowerSeries r(f.order() + j);
    for (int i = 0; i <= f.order(); ++i) r.set_coeff(i + j, f.coeff(i));
    return r;
}

PowerSeries binomial_series(const Rational& alpha, int order) {
    PowerSeries r(order);
    Rational c(1);
    r.set_coeff(0, c);
    for (int k = 1; k <= order; ++k) {
        c *= (alpha - Rational(k - 1)) / Rational(k);
        r.set_coeff(k, c);
    }
    return r;
}

bool equal_through(const PowerSeries& a, const PowerSeries& b, int k) {
    for (int i = 0; i <= k; ++i)
        if (a.coeff(i) != b.coeff(i)) return false;
    return true;
}

PowerSeries g_b_series(Coord b, int N) {
    if (b < 1) throw std::domain_error("g_b_series: b must be >= 1");
    if (N < 1) throw std::domain_error("g_b_series: N must be >= 1");
    PowerSeries g(N);
    for (int n = 1; n <= N; ++n)
        g.set_coeff(n, Rational(int_pow(Integer(b * n), static_cast<unsigned long>(n - 1)),
                                factorial(n)));
    return g;
}

bool verify_functional_equation(Coord b, int N) {
    const PowerSeries g = g_b_series(b, N);
    const PowerSeries rhs = ps_shift(ps_exp(ps_scale(Rational(b), g)), 1);
    return equal_through(g, rhs, N);
}

PowerSeries f_ab_series(Coord a, Coord b, int N) {
    if (a < 1 || b < 1) throw std::domain_error("f_ab_series: a, b must be >= 1");
    const PowerSeries g = g_b_series(b, N);
    const PowerSeries inv_sqrt =
        ps_compose(binomial_series(Rational(-1, 2), N), ps_scale(Rational(-Coord(b)), g));
    const Rational c = Rational(a) - Rational(Coord(b), 2) - Rational(1);
    return ps_mul(inv_sqrt, ps_exp(ps_scale(c, g)));
}

bool ck_egf_check(int N) {
    if (N < 2) throw std::domain_error("ck_egf_check: N must be >= 2");
    PowerSeries one_minus_2x(N);
    one_minus_2x.set_coeff(0, Rational(1));
    one_minus_2x.set_coeff(1, Rational(-2));
    const PowerSeries egf = ps_mul(ps_sqrt(one_minus_2x), ps_exp(PowerSeries::x(N)));
    std::vector<Integer> c(static_cast<size_t>(N) + 1);
    for (int k = 0; k <= N; ++k) {
        const Rational ck = Rational(factorial(k)) * egf.coeff(k);
        if (!ck.is_integer()) return false;
        c[static_cast<size_t>(k)] = ck.to_integer();
    }
    if (c[0] != 1) return false;
    for (int k = 2; k <= N; ++k)
        if (c[static_cast<size_t>(k)] !=
            2 * (k - 1) * (c[static_cast<size_t>(k - 1)] - c[static_cast<size_t>(k - 2)]))
            return false;
    const CkSequence ref = ck_sequence(N);
    return c == ref.values;
}

}  // namespace parkpoly
