#pragma once

#include <vector>

#include "parkpoly/lattice.hpp"
#include "parkpoly/rational.hpp"

namespace parkpoly {

/// Truncated formal power series with exact rational coefficients 0..order.
/// Accessing a coefficient beyond the truncation order throws; operations
/// propagate the minimum order of their operands, so a coefficient is only
/// ever reported when it is exact.
class PowerSeries {
public:
    explicit PowerSeries(int order);

    static PowerSeries x(int order);
    static PowerSeries constant(const Rational& c, int order);

    int order() const { return order_; }
    const Rational& coeff(int i) const;
    void set_coeff(int i, const Rational& v);

private:
    int order_;
    std::vector<Rational> c_;
};

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_scale(const Rational& s, const PowerSeries& a);
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);

/// f(g) for g with zero constant term.
PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g);

/// exp(f) for f with zero constant term.
PowerSeries ps_exp(const PowerSeries& f);

/// sqrt(f) for f with constant term 1.
PowerSeries ps_sqrt(const PowerSeries& f);

PowerSeries ps_derive(const PowerSeries& f);

/// Antiderivative with zero constant term; exact one order beyond f.
PowerSeries ps_integrate(const PowerSeries& f);

/// Multiply by x^j (order grows by j).
PowerSeries ps_shift(const PowerSeries& f, int j);

/// (1 + x)^alpha for rational alpha.
PowerSeries binomial_series(const Rational& alpha, int order);

/// Coefficientwise equality through x^k (both operands must carry order k).
bool equal_through(const PowerSeries& a, const PowerSeries& b, int k);

/// The tree-function series sum_{n>=1} (bn)^{n-1}/n! x^n.
PowerSeries g_b_series(Coord b, int N);

/// g_b(x) = x e^{b g_b(x)}, checked coefficientwise through order N.
bool verify_functional_equation(Coord b, int N);

/// Volume EGF (1 - b g_b(x))^{-1/2} e^{(a - b/2 - 1) g_b(x)}; coefficient of
/// x^n is the Euclidean volume of X_n(a,b) divided by n!.
PowerSeries f_ab_series(Coord a, Coord b, int N);

/// k! [x^k] (sqrt(1-2x) e^x) reproduces c_0 = 1, c_1 = 0 and the recurrence
/// c_k = 2(k-1)(c_{k-1} - c_{k-2}), and matches ck_sequence.
bool ck_egf_check(int N);

}  // namespace parkpoly
