#include "fivol/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fivol/numerics.hpp"

namespace fivol {

namespace {

// 15-point Kronrod nodes/weights on [-1,1] with the embedded 7-point Gauss
// rule (nodes at odd Kronrod indices). Standard QUADPACK constants.
const double kXgk[15] = {
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

const double kWgk[15] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

const double kWg[7] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct PanelResult {
    double value;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    KahanSum kronrod;
    KahanSum gauss;
    for (int j = 0; j < 15; ++j) {
        const double fx = f(c + half * kXgk[j]);
        kronrod.add(kWgk[j] * fx);
        if (j % 2 == 1) gauss.add(kWg[j / 2] * fx);
    }
    const double vk = kronrod.value() * half;
    const double vg = gauss.value() * half;
    double err = std::abs(vk - vg);
    // QUADPACK-style sharpening of the raw difference.
    err = 200.0 * err * std::sqrt(std::max(err, 1e-300));
    err = std::min(err, std::abs(vk - vg) == 0.0 ? 0.0 : std::max(std::abs(vk - vg), 1e-300));
    if (err == 0.0) err = std::abs(vk - vg);
    return {vk, err};
}

void integrate_rec(const std::function<double(double)>& f, double a, double b,
                   double tol, int depth, int max_depth,
                   KahanSum& value, KahanSum& error, bool& converged) {
    PanelResult p = gk15(f, a, b);
    if (p.error <= tol || depth >= max_depth) {
        if (p.error > tol) converged = false;
        value.add(p.value);
        error.add(p.error);
        return;
    }
    const double m = 0.5 * (a + b);
    integrate_rec(f, a, m, 0.5 * tol, depth + 1, max_depth, value, error, converged);
    integrate_rec(f, m, b, 0.5 * tol, depth + 1, max_depth, value, error, converged);
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b, double abs_tol, int max_depth) {
    QuadResult r;
    if (!(b > a)) return r;
    KahanSum value, error;
    bool converged = true;
    integrate_rec(f, a, b, abs_tol, 0, max_depth, value, error, converged);
    r.value = value.value();
    r.error_estimate = error.value();
    r.converged = converged;
    return r;
}

QuadResult integrate_segmented(const std::function<double(double)>& f,
                               double a, double b, double abs_tol,
                               const std::vector<double>& breaks) {
    QuadResult total;
    if (!(b > a)) return total;

    std::vector<double> knots;
    knots.push_back(a);
    // Geometric refinement towards a when the interval spans many scales.
    if (a > 0.0 && b / a > 4.0) {
        for (double t = 2.0 * a; t < 0.5 * b; t *= 2.0) knots.push_back(t);
    }
    knots.push_back(b);
    for (double br : breaks)
        if (br > a && br < b) knots.push_back(br);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

    const double seg_tol = abs_tol / double(knots.size() - 1);
    KahanSum value, error;
    for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
        QuadResult r = integrate_adaptive(f, knots[k], knots[k + 1], seg_tol);
        value.add(r.value);
        error.add(r.error_estimate);
        total.converged = total.converged && r.converged;
    }
    total.value = value.value();
    total.error_estimate = error.value();
    return total;
}

}  // namespace fivol
