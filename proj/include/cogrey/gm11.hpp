#ifndef COGREY_GM11_HPP
#define COGREY_GM11_HPP

#include <cstddef>
#include <vector>

namespace cogrey {

/// Single-variable grey model coefficients. `degenerate` marks a development
/// coefficient too close to zero for the exponential response; prediction
/// then returns the constant b.
struct Gm11Params {
    double a = 0.0;   // development coefficient
    double b = 0.0;   // grey control
    double u1 = 0.0;  // first observation, anchors the response
    bool degenerate = false;
};

/// Least-squares fit of u(k) = -a*z(k) + b over k = 2..n, where z is the
/// mean of consecutive cumulative sums of u. Needs at least 4 points.
Gm11Params fit_gm11(const std::vector<double>& u);

/// Whitenization response evaluated over steps 1..n+h, returned as the
/// original-scale sequence (cumulative differences, first value = u1).
std::vector<double> predict_gm11(const Gm11Params& p, std::size_t n, std::size_t h);

}  // namespace cogrey

#endif
