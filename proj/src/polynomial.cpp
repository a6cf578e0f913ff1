#include "parkpoly/polynomial.hpp"

#include <stdexcept>

namespace parkpoly {

Rational Polynomial::evaluate(const Rational& x) const {
    Rational r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Polynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    if (points.empty()) throw std::domain_error("lagrange_interpolate: no points");
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::domain_error("lagrange_interpolate: duplicate x-value " +
                                        points[i].first.str());

    // Newton form: divided differences, then expansion by (x - x_j) factors.
    std::vector<Rational> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

    std::vector<Rational> acc;  // running product (x - x_0)...(x - x_{k-1})
    acc.push_back(Rational(1));
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < acc.size(); ++i) out[i] += dd[k] * acc[i];
        if (k + 1 < n) {
            acc.push_back(Rational(0));
            for (std::size_t i = acc.size() - 1; i >= 1; --i)
                acc[i] = acc[i - 1] - points[k].first * acc[i];
            acc[0] = -points[k].first * acc[0];
        }
    }
    return Polynomial(std::move(out));
}

}  // namespace parkpoly
