#pragma once

#include <vector>

namespace fivol {

/// Monotonicity-preserving piecewise-cubic Hermite interpolant
/// (Fritsch-Carlson slope limiting). Exact on quadratic data with the
/// three-point endpoint formulas used here.
class PchipInterpolant {
public:
    PchipInterpolant() = default;
    PchipInterpolant(std::vector<double> x, std::vector<double> y);

    double operator()(double t) const;
    double xmin() const { return x_.front(); }
    double xmax() const { return x_.back(); }
    bool empty() const { return x_.empty(); }

private:
    std::vector<double> x_, y_, slope_;
};

}  // namespace fivol
