#include "frogbounds/analytic.hpp"

#include <algorithm>
#include <cmath>

namespace frogbounds {

BranchRatio beta(Degree d, Probability p) {
    const double dd = d.value();
    const double pv = p.value();
    if (pv == 0.0) return BranchRatio(0.0, d);
    // Small root of  d*p*b^2 - (d+1)*b + p = 0,  written so the subtraction
    // of nearly equal terms never happens.
    const double disc = (dd + 1.0) * (dd + 1.0) - 4.0 * dd * pv * pv;
    double b = 2.0 * pv / ((dd + 1.0) + std::sqrt(disc));
    b = std::min(b, 1.0 / dd);  // rounding clamp; the true value never exceeds 1/d
    return BranchRatio(b, d);
}

Probability beta_inverse(const BranchRatio& v) {
    const double dd = v.degree().value();
    const double b = v.value();
    return Probability((dd + 1.0) * b / (1.0 + dd * b * b));
}

double psi(const BranchRatio& b) {
    const double x = b.value();
    return std::sqrt(x * x * x * x - 4.0 * x + 4.0);
}

double lambda_growth(const BranchRatio& b) {
    const double x = b.value();
    return 0.5 * x * (2.0 - x * x + psi(b));
}

ClassicBounds classic_bounds(Degree d) {
    const double dd = d.value();
    ClassicBounds out{};
    out.ub_original = (dd + 1.0) / (2.0 * dd);
    if (d.value() == 2) {
        // Known numeric value for d=2; the surd below only applies from d=3 up.
        out.ub_fmrt = 0.720836;
    } else {
        const double w = 7.0 * dd - 1.0;
        const double s = std::sqrt(w * w - 14.0);
        out.ub_fmrt = (dd + 1.0) * (w - s) / (dd * w * w - 7.0 * dd + 2.0 - dd * w * s);
    }
    return out;
}

}  // namespace frogbounds
