#include "cogrey/gadgmss.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "cogrey/errors.hpp"

namespace cogrey {

namespace {
constexpr double kDenominatorFloor = 1e-12;
}

double estimate_beta1(const CompositionSeries& centralized) {
    if (centralized.size() < 2) {
        throw DegenerateSeries("beta1 estimation needs at least 2 rows");
    }
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k + 1 < centralized.size(); ++k) {
        num += inner_product(centralized[k + 1], centralized[k]);
        den += inner_product(centralized[k], centralized[k]);
    }
    if (den <= kDenominatorFloor) {
        throw DegenerateSeries("centralized series is uniform; development "
                               "coefficient is undetermined");
    }
    return num / den;
}

GadgmssFit fit(const CompositionSeries& x0, const AccumulationMatrix& b,
               ExtendMode extend_mode) {
    const std::size_t n = x0.size();
    if (n < 3) {
        throw DegenerateSeries("fit needs at least 3 rows, got " + std::to_string(n));
    }
    GadgmssFit f;
    f.b = b;
    f.extend_mode = extend_mode;
    f.accumulated = accumulate(b, x0);
    f.center = center(f.accumulated);
    f.centralized = centralize(f.accumulated);
    f.beta1 = estimate_beta1(f.centralized);

    // One-step predictions from observed predecessors; the first accumulated
    // row is kept as observed so the reconstruction anchors there.
    std::vector<Composition> acc_hat;
    acc_hat.reserve(n);
    acc_hat.push_back(f.accumulated[0]);
    f.sse = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const Composition pred = power(f.beta1, f.centralized[k]);
        const Composition resid = perturb(f.centralized[k + 1], pred, /*inverse=*/true);
        f.sse += inner_product(resid, resid);
        acc_hat.push_back(perturb(pred, f.center));
    }
    CompositionSeries fitted = deaccumulate(
        b, CompositionSeries(std::move(acc_hat), x0.labels(), x0.names()));
    // Row 1 of the inversion equals observation 1 up to rounding; pin it.
    std::vector<Composition> rows = fitted.rows();
    rows[0] = x0[0];
    f.fitted = CompositionSeries(std::move(rows), x0.labels(), x0.names());
    return f;
}

CompositionSeries forecast(const GadgmssFit& fit, std::size_t h) {
    if (h == 0) {
        return CompositionSeries({}, {}, fit.fitted.names());
    }
    const std::size_t n = fit.accumulated.size();
    std::vector<Composition> acc_rows = fit.accumulated.rows();
    acc_rows.reserve(n + h);
    Composition state = fit.centralized[n - 1];
    for (std::size_t t = 0; t < h; ++t) {
        state = power(fit.beta1, state);
        acc_rows.push_back(perturb(state, fit.center));
    }
    const AccumulationMatrix ext = extend_for_forecast(fit.b, h, fit.extend_mode);
    const CompositionSeries all =
        deaccumulate(ext, CompositionSeries(std::move(acc_rows)));
    std::vector<Composition> tail(all.rows().begin() + static_cast<std::ptrdiff_t>(n),
                                  all.rows().end());
    return CompositionSeries(std::move(tail), {}, fit.fitted.names());
}

double ratio_propagation_error(const GadgmssFit& fit, const CompositionSeries& x0) {
    const CompositionSeries dotted = centralize(accumulate(fit.b, x0));
    const std::size_t d = dotted.parts();
    double worst = 0.0;
    for (std::size_t k = 0; k + 1 < dotted.size(); ++k) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t jp = 0; jp < d; ++jp) {
                if (j == jp) continue;
                const double next = std::log(dotted[k + 1][j] / dotted[k + 1][jp]);
                const double cur = std::log(dotted[k][j] / dotted[k][jp]);
                worst = std::max(worst, std::abs(next - fit.beta1 * cur));
            }
        }
    }
    return worst;
}

}  // namespace cogrey
