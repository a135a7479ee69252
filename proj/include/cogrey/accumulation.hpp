#ifndef COGREY_ACCUMULATION_HPP
#define COGREY_ACCUMULATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cogrey/composition.hpp"

namespace cogrey {

/// Lower-triangular accumulation weight matrix. Row k holds the weights
/// combining observations 1..k into accumulated point k. Stored packed
/// row-major (n(n+1)/2 entries).
class AccumulationMatrix {
public:
    AccumulationMatrix() = default;
    AccumulationMatrix(std::size_t n, std::vector<double> packed);

    std::size_t size() const { return n_; }
    double at(std::size_t i, std::size_t j) const;  // zero above the diagonal
    const std::vector<double>& packed() const { return entries_; }

private:
    std::size_t n_ = 0;
    std::vector<double> entries_;
};

/// How rows beyond the fitted window are filled when forecasting.
enum class ExtendMode {
    /// Appended rows are all ones (the classical cumulative extension).
    unit,
    /// Appended rows copy row n's weights for columns 1..n and use weight 1
    /// for the new columns.
    replicate_last,
};

/// Classical accumulation: every lower-triangular weight is 1.
AccumulationMatrix standard_ago(std::size_t n);

/// Row k of the result is the weighted perturbation sum of the first k rows
/// of x: (+)_j b_kj (x) x_j.
CompositionSeries accumulate(const AccumulationMatrix& b, const CompositionSeries& x);

/// Inverse of accumulate by forward substitution in simplex arithmetic.
/// Throws SingularMatrix when any diagonal weight is below 1e-6 in modulus.
CompositionSeries deaccumulate(const AccumulationMatrix& b, const CompositionSeries& y);

/// Grow b to (n+h) x (n+h) for forecasting, per `mode`.
AccumulationMatrix extend_for_forecast(const AccumulationMatrix& b, std::size_t h,
                                       ExtendMode mode = ExtendMode::replicate_last);

/// Packed row-major lower-triangular codec used by the optimizer and the
/// JSON artifact.
std::vector<double> encode(const AccumulationMatrix& b);
AccumulationMatrix decode(const std::vector<double>& packed, std::size_t n);

/// JSON artifact ({"n": ..., "entries": [...]}) and a dense n x n CSV grid
/// for heatmap plotting.
std::string to_json_string(const AccumulationMatrix& b);
AccumulationMatrix matrix_from_json_string(const std::string& text);
std::string to_heatmap_csv(const AccumulationMatrix& b);

}  // namespace cogrey

#endif
