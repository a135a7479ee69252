#include "cogrey/gm11.hpp"

#include <cmath>
#include <string>

#include "cogrey/errors.hpp"

namespace cogrey {

namespace {
constexpr double kDegenerateA = 1e-8;
}

Gm11Params fit_gm11(const std::vector<double>& u) {
    const std::size_t n = u.size();
    if (n < 4) {
        throw DegenerateSeries("gm11 fit needs at least 4 points, got " +
                               std::to_string(n));
    }
    // Background values from the accumulated sequence.
    std::vector<double> z(n - 1);
    double cum = u[0];
    for (std::size_t k = 1; k < n; ++k) {
        const double prev = cum;
        cum += u[k];
        z[k - 1] = 0.5 * (cum + prev);
    }
    // Normal equations for u(k) = -a*z(k) + b.
    double szz = 0.0, sz = 0.0, szy = 0.0, sy = 0.0;
    const double m = static_cast<double>(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        szz += z[k - 1] * z[k - 1];
        sz += z[k - 1];
        szy += z[k - 1] * u[k];
        sy += u[k];
    }
    const double det = m * szz - sz * sz;
    const double scale = std::max(1.0, m * szz);
    if (std::abs(det) < 1e-12 * scale) {
        throw SingularNormalEquations("gm11 normal equations are rank-deficient");
    }
    const double slope = (m * szy - sz * sy) / det;  // u = slope*z + intercept
    const double intercept = (sy - slope * sz) / m;
    Gm11Params p;
    p.a = -slope;
    p.b = intercept;
    p.u1 = u[0];
    p.degenerate = std::abs(p.a) < kDegenerateA;
    return p;
}

std::vector<double> predict_gm11(const Gm11Params& p, std::size_t n, std::size_t h) {
    const std::size_t total = n + h;
    std::vector<double> out(total);
    out[0] = p.u1;
    if (p.degenerate) {
        for (std::size_t k = 1; k < total; ++k) out[k] = p.b;
        return out;
    }
    const double level = p.b / p.a;
    const double amp = p.u1 - level;
    double prev = p.u1;  // response at step 1
    for (std::size_t k = 1; k < total; ++k) {
        const double cur = amp * std::exp(-p.a * static_cast<double>(k)) + level;
        out[k] = cur - prev;
        prev = cur;
    }
    return out;
}

}  // namespace cogrey
