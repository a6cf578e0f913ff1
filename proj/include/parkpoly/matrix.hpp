#pragma once

#include <cstddef>
#include <vector>

#include "parkpoly/lattice.hpp"
#include "parkpoly/rational.hpp"

namespace parkpoly {

/// Dense rational matrix; only used for exact rank computations.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    /// Rank over the rationals (fraction-free correctness is not needed at
    /// these sizes; plain Gaussian elimination with exact arithmetic).
    std::size_t rank() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Dimension of the affine span of a nonempty point set: the rank of
/// {p - p0 : p in points}. Throws on mixed lengths or an empty list.
int affine_rank(const std::vector<LatticePoint>& points);

}  // namespace parkpoly
