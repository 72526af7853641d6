#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace fivol {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_tolerance(achieved) {}
    double achieved_tolerance;
};

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a,b] to the given
/// absolute tolerance. Deterministic: intervals are refined left-to-right.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b, double abs_tol,
                              int max_depth = 48);

/// Same, but the interval is pre-split at the given break points (useful for
/// piecewise-smooth integrands) and, when b/a is large, into geometric
/// segments so that power-law behaviour near a is resolved cheaply.
QuadResult integrate_segmented(const std::function<double(double)>& f,
                               double a, double b, double abs_tol,
                               const std::vector<double>& breaks = {});

}  // namespace fivol
