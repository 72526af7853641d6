#include "fivol/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fivol {

namespace {

// Shape-preserving three-point endpoint slope (Fritsch-Carlson).
double endpoint_slope(double h0, double h1, double d0, double d1) {
    double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (s * d0 <= 0.0)
        s = 0.0;
    else if (d0 * d1 <= 0.0 && std::abs(s) > 3.0 * std::abs(d0))
        s = 3.0 * d0;
    return s;
}

}  // namespace

PchipInterpolant::PchipInterpolant(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n != y_.size() || n < 2) throw std::invalid_argument("pchip: need >= 2 samples");
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (!(x_[k + 1] > x_[k])) throw std::invalid_argument("pchip: x not increasing");

    std::vector<double> h(n - 1), d(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        h[k] = x_[k + 1] - x_[k];
        d[k] = (y_[k + 1] - y_[k]) / h[k];
    }
    slope_.assign(n, 0.0);
    if (n == 2) {
        slope_[0] = slope_[1] = d[0];
        return;
    }
    slope_[0] = endpoint_slope(h[0], h[1], d[0], d[1]);
    slope_[n - 1] = endpoint_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (d[k - 1] * d[k] <= 0.0) {
            slope_[k] = 0.0;
        } else {
            // Weighted harmonic mean keeps the interpolant monotone.
            double w1 = 2.0 * h[k] + h[k - 1];
            double w2 = h[k] + 2.0 * h[k - 1];
            slope_[k] = (w1 + w2) / (w1 / d[k - 1] + w2 / d[k]);
        }
    }
}

double PchipInterpolant::operator()(double t) const {
    if (t <= x_.front()) {
        return y_.front() + slope_.front() * (t - x_.front());
    }
    if (t >= x_.back()) {
        return y_.back() + slope_.back() * (t - x_.back());
    }
    auto it = std::upper_bound(x_.begin(), x_.end(), t);
    std::size_t k = std::size_t(it - x_.begin()) - 1;
    double h = x_[k + 1] - x_[k];
    double s = (t - x_[k]) / h;
    double s2 = s * s, s3 = s2 * s;
    double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    double h10 = s3 - 2.0 * s2 + s;
    double h01 = -2.0 * s3 + 3.0 * s2;
    double h11 = s3 - s2;
    return h00 * y_[k] + h10 * h * slope_[k] + h01 * y_[k + 1] + h11 * h * slope_[k + 1];
}

}  // namespace fivol
