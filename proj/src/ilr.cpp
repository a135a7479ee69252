#include "cogrey/ilr.hpp"

#include <cmath>

#include "cogrey/errors.hpp"

namespace cogrey {

IlrBasis::IlrBasis(std::size_t d) : d_(d) {
    if (d < 2) {
        throw DegenerateDimension("ilr basis needs at least 2 parts");
    }
    h_.assign(d * (d - 1), 0.0);
    for (std::size_t col = 0; col < d - 1; ++col) {
        const double i = static_cast<double>(col + 1);
        const double head = std::sqrt(1.0 / (i * (i + 1.0)));
        for (std::size_t row = 0; row <= col; ++row) {
            h_[row * (d_ - 1) + col] = head;
        }
        h_[(col + 1) * (d_ - 1) + col] = -std::sqrt(i / (i + 1.0));
    }
    // Orthonormality is structural for this construction; verify anyway so a
    // future edit cannot silently break the isometry.
    for (std::size_t a = 0; a < d - 1; ++a) {
        for (std::size_t b = a; b < d - 1; ++b) {
            double dot = 0.0;
            for (std::size_t row = 0; row < d; ++row) dot += at(row, a) * at(row, b);
            const double expect = (a == b) ? 1.0 : 0.0;
            if (std::abs(dot - expect) > 1e-12) {
                throw NumericError("ilr basis columns not orthonormal");
            }
        }
    }
}

std::vector<double> ilr_forward(const Composition& x, const IlrBasis& basis) {
    if (x.size() != basis.parts()) {
        throw DimensionMismatch("ilr_forward: composition/basis size mismatch");
    }
    std::vector<double> y(basis.coords(), 0.0);
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double lx = std::log(x[j]);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += basis.at(j, i) * lx;
    }
    return y;
}

Composition ilr_inverse(const std::vector<double>& y, const IlrBasis& basis) {
    if (y.size() != basis.coords()) {
        throw DimensionMismatch("ilr_inverse: coordinate/basis size mismatch");
    }
    std::vector<double> logs(basis.parts(), 0.0);
    for (std::size_t j = 0; j < logs.size(); ++j) {
        for (std::size_t i = 0; i < y.size(); ++i) logs[j] += basis.at(j, i) * y[i];
    }
    return composition_from_log(logs);
}

IlrCoords ilr_series(const CompositionSeries& x, const IlrBasis& basis) {
    IlrCoords out;
    out.rows = x.size();
    out.cols = basis.coords();
    out.values.resize(out.rows * out.cols);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::vector<double> y = ilr_forward(x[i], basis);
        for (std::size_t j = 0; j < out.cols; ++j) out.at(i, j) = y[j];
    }
    return out;
}

CompositionSeries ilr_series_inverse(const IlrCoords& coords, const IlrBasis& basis) {
    std::vector<Composition> rows;
    rows.reserve(coords.rows);
    std::vector<double> y(coords.cols);
    for (std::size_t i = 0; i < coords.rows; ++i) {
        for (std::size_t j = 0; j < coords.cols; ++j) y[j] = coords.at(i, j);
        rows.push_back(ilr_inverse(y, basis));
    }
    return CompositionSeries(std::move(rows));
}

}  // namespace cogrey
