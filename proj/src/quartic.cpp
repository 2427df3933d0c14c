#include "frogbounds/quartic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace frogbounds {

namespace {

// Radicands that are nonnegative in exact arithmetic may round slightly
// negative; anything beyond this slack means the formulas are wrong.
constexpr double kRadicandSlack = -1e-12;

double guarded_sqrt(double radicand, const char* what) {
    if (radicand < kRadicandSlack)
        throw NumericGuardError(std::string(what) + " radicand is negative: " +
                                std::to_string(radicand));
    return std::sqrt(radicand < 0.0 ? 0.0 : radicand);
}

}  // namespace

PolyEval poly_R(Degree d) {
    const double dd = d.value();
    PolyEval p;
    p.degree = 4;
    p.coeffs = {-1.0, 2.0 * dd, 0.0, -dd * (dd + 1.0), dd * dd};
    return p;
}

PolyEval poly_Q(Degree d) {
    const double dd = d.value();
    const double e = dd + 1.0;
    const double m = 3.0 * dd + 1.0;
    PolyEval p;
    p.degree = 4;
    p.coeffs = {-e * e * e * e / (dd * m * m),
                e * e * e / (dd * m),
                -2.0 * (dd - 1.0) * e * e / (m * m),
                -4.0 * e / m,
                1.0};
    return p;
}

QuarticConstants descartes_constants(Degree d) {
    const double dd = d.value();
    const double e = dd + 1.0;
    const double m = 3.0 * dd + 1.0;

    QuarticConstants c{};
    c.Q = -2.0 * e * e * (dd + 2.0) / (m * m);
    c.R = e * e * e * (5.0 * dd * dd + 2.0 * dd + 1.0) / (dd * m * m * m);
    c.S = -e * e * e * e * (2.0 * dd + 1.0) / (m * m * m * m);

    // Factored so every intermediate stays O(1)..O(1e8); the raw integer
    // numerator of O overflows the 53-bit mantissa from d ~ 60 on.
    const double cubic = ((16.0 * dd - 259.0) * dd - 162.0) * dd - 27.0;
    const double rm = (dd - 1.0) / m;
    const double em = e / m;
    c.O = -rm * rm * em * em * em * em * e * e * cubic / (3456.0 * dd * dd);
    const double inner = (dd - 1.0) * e * e / (6.0 * m * m);
    c.P = -inner * inner;

    // theta only parameterizes the trig branch; for d <= 9 the arccos
    // argument exceeds 1 and is clamped, leaving theta = 0 as a placeholder.
    double arg = c.O / std::sqrt(-c.P * c.P * c.P);
    arg = std::clamp(arg, -1.0, 1.0);
    c.theta = std::acos(arg) / 3.0;

    if (d.value() <= 9) {
        c.branch = KBranch::Cardano;
        const double disc = guarded_sqrt(c.O * c.O + c.P * c.P * c.P, "resolvent discriminant");
        const double w = std::cbrt(c.O + disc) + std::cbrt(c.O - disc);
        c.K = guarded_sqrt((-c.Q + 6.0 * w) / 6.0, "resolvent root");
    } else {
        c.branch = KBranch::Trigonometric;
        const double w = 2.0 * std::sqrt(-c.P) * std::cos(c.theta);
        c.K = guarded_sqrt((-c.Q + 6.0 * w) / 6.0, "resolvent root");
    }
    return c;
}

Probability pbar_closed(Degree d) {
    const QuarticConstants c = descartes_constants(d);
    const double dd = d.value();
    const double rad =
        c.K * (-4.0 * c.K * c.K * c.K - 2.0 * c.K * c.Q + c.R);
    const double root = guarded_sqrt(rad, "bound");
    return Probability((dd + 1.0) / (3.0 * dd + 1.0) - c.K + root / (2.0 * c.K));
}

double discriminant_H0(Degree d) {
    const double dd = d.value();
    const double cubic = ((32.0 * dd - 275.0) * dd - 162.0) * dd - 27.0;
    return std::pow(dd - 1.0, 4) * std::pow(dd + 1.0, 12) * cubic;
}

ReducedQuarticRoots quartic_roots_reduced(Degree d) {
    const QuarticConstants c = descartes_constants(d);
    const double rad1 = c.K * (-4.0 * c.K * c.K * c.K - 2.0 * c.K * c.Q + c.R);
    const double rad2 = -c.K * (4.0 * c.K * c.K * c.K + 2.0 * c.K * c.Q + c.R);
    const double half1 = guarded_sqrt(rad1, "first quadratic factor") / (2.0 * c.K);

    ReducedQuarticRoots out{};
    out.z[0] = {{-c.K - half1, 0.0}, true};
    out.z[1] = {{-c.K + half1, 0.0}, true};
    if (rad2 < 0.0) {
        const double half2 = std::sqrt(-rad2) / (2.0 * c.K);
        out.z[2] = {{c.K, -half2}, false};
        out.z[3] = {{c.K, half2}, false};
    } else {
        const double half2 = std::sqrt(rad2) / (2.0 * c.K);
        out.z[2] = {{c.K - half2, 0.0}, true};
        out.z[3] = {{c.K + half2, 0.0}, true};
    }
    return out;
}

double isolate_root(const std::function<double(double)>& fn, double lo, double hi, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("isolate_root requires tol > 0");
    if (!(lo < hi)) throw std::invalid_argument("isolate_root requires lo < hi");
    double flo = fn(lo);
    if (flo == 0.0) return lo;
    const double fhi = fn(hi);
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        throw BracketError("no sign change on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
    int steps = 0;
    while (hi - lo > tol && ++steps <= 200) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket hit adjacent doubles
        const double fm = fn(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace frogbounds
