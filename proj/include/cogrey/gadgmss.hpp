#ifndef COGREY_GADGMSS_HPP
#define COGREY_GADGMSS_HPP

#include <cstddef>

#include "cogrey/accumulation.hpp"
#include "cogrey/composition.hpp"

namespace cogrey {

/// Fitted state of the accumulation grey model on a composition series.
struct GadgmssFit {
    double beta1 = 0.0;            // development coefficient
    Composition center;            // center of the accumulated training series
    AccumulationMatrix b;
    CompositionSeries accumulated; // observed accumulated series (n rows)
    CompositionSeries centralized; // accumulated series re-centered at uniform
    CompositionSeries fitted;      // reconstructed original-scale series; row 1 = observation 1
    double sse = 0.0;              // Aitchison SSE of the one-step residuals
    ExtendMode extend_mode = ExtendMode::replicate_last;
};

/// Ratio estimator sum_k (x(k+1), x(k)) / sum_k (x(k), x(k)) over a
/// centralized series; the least-squares minimizer of the one-step residual
/// norm. Throws DegenerateSeries when the denominator vanishes (constant
/// input composition).
double estimate_beta1(const CompositionSeries& centralized);

/// Full fit: accumulate, centralize, estimate beta1, reconstruct the
/// training window by one-step prediction from observed predecessors.
/// Needs n >= 3.
GadgmssFit fit(const CompositionSeries& x0, const AccumulationMatrix& b,
               ExtendMode extend_mode = ExtendMode::replicate_last);

/// h steps beyond the training window: iterates the centralized recursion
/// from the last observed accumulated row, then inverts the extended
/// accumulation.
CompositionSeries forecast(const GadgmssFit& fit, std::size_t h);

/// Diagnostic for the log-ratio propagation identity: max over consecutive
/// row pairs and part pairs of |log-ratio(k+1) - beta1 * log-ratio(k)| on
/// the centralized accumulated series. Near zero when the data follows the
/// model exactly.
double ratio_propagation_error(const GadgmssFit& fit, const CompositionSeries& x0);

}  // namespace cogrey

#endif
