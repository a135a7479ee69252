#ifndef COGREY_ILR_HPP
#define COGREY_ILR_HPP

#include <cstddef>
#include <vector>

#include "cogrey/composition.hpp"

namespace cogrey {

/// Orthonormal isometric log-ratio basis for D-part compositions.
/// Column i (0-based) carries sqrt(1/((i+1)(i+2))) in rows 0..i and
/// -sqrt((i+1)/(i+2)) in row i+1: the balance basis whose columns are
/// orthonormal and sum to zero.
class IlrBasis {
public:
    explicit IlrBasis(std::size_t d);

    std::size_t parts() const { return d_; }
    std::size_t coords() const { return d_ - 1; }

    /// Contrast coefficient H[row][col], row < D, col < D-1.
    double at(std::size_t row, std::size_t col) const { return h_[row * (d_ - 1) + col]; }

private:
    std::size_t d_ = 0;
    std::vector<double> h_;  // row-major D x (D-1)
};

/// Real coordinate matrix of an ilr-transformed series, n x (D-1) row-major.
struct IlrCoords {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;

    double at(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
    double& at(std::size_t i, std::size_t j) { return values[i * cols + j]; }
};

/// Coordinates of x in the basis: y_i = sum_j H[j][i] * log(x_j).
std::vector<double> ilr_forward(const Composition& x, const IlrBasis& basis);

/// Inverse map: closure(exp(H * y)).
Composition ilr_inverse(const std::vector<double>& y, const IlrBasis& basis);

/// Rowwise forward / inverse over a series.
IlrCoords ilr_series(const CompositionSeries& x, const IlrBasis& basis);
CompositionSeries ilr_series_inverse(const IlrCoords& coords, const IlrBasis& basis);

}  // namespace cogrey

#endif
