#pragma once

#include <utility>
#include <vector>

#include "parkpoly/rational.hpp"

namespace parkpoly {

/// Univariate polynomial with exact rational coefficients, index = degree.
/// Normalized so the highest-index coefficient is nonzero (zero polynomial
/// has an empty coefficient vector and degree -1).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coefficients() const { return c_; }

    Rational evaluate(const Rational& x) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Rational> c_;
};

/// The unique polynomial of degree < points.size() through the given
/// (x, y) pairs, exactly. Throws on duplicate x-values or an empty list.
Polynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace parkpoly
