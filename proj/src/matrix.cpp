#include "parkpoly/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace parkpoly {

std::size_t RationalMatrix::rank() const {
    RationalMatrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < rows_ && m.at(pivot, c).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r)
            for (std::size_t j = c; j < cols_; ++j) std::swap(m.at(r, j), m.at(pivot, j));
        const Rational inv = Rational(1) / m.at(r, c);
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            const Rational f = m.at(i, c) * inv;
            for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

int affine_rank(const std::vector<LatticePoint>& points) {
    if (points.empty()) throw std::domain_error("affine_rank: empty point list");
    const std::size_t dim = points[0].size();
    for (const auto& p : points)
        if (p.size() != dim) throw std::domain_error("affine_rank: mixed point lengths");
    if (points.size() == 1) return 0;
    RationalMatrix m(points.size() - 1, dim);
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j)
            m.at(i - 1, j) = Rational(Integer(points[i][j] - points[0][j]));
    return static_cast<int>(m.rank());
}

}  // namespace parkpoly
