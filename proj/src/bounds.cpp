#include "frogbounds/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "frogbounds/analytic.hpp"
#include "frogbounds/phi.hpp"
#include "frogbounds/quartic.hpp"

namespace frogbounds {

Probability pbar_n(Degree d, int n, double tol) {
    if (n < 1) throw std::domain_error("pbar_n requires n >= 1");
    auto fn = [d, n](double p) { return f_n(d, n, Probability(p)); };
    // f_n(0) = -1/d < 0 always.  f_n(1) is positive for n >= 2 and exactly
    // zero for n = 1 (phi_1 = beta and beta(1) = 1/d), so the n = 1 root is
    // the right endpoint itself.
    if (fn(1.0) == 0.0) return Probability(1.0);
    return Probability(isolate_root(fn, 0.0, 1.0, tol));
}

BoundsRow bounds_row(Degree d, const std::vector<int>& n_samples) {
    for (size_t i = 0; i < n_samples.size(); ++i) {
        if (n_samples[i] < 1 || (i > 0 && n_samples[i] <= n_samples[i - 1]))
            throw std::invalid_argument("n_samples must be positive and strictly increasing");
    }
    BoundsRow row;
    row.d = d.value();
    const ClassicBounds classic = classic_bounds(d);
    row.ub_original = classic.ub_original;
    row.ub_fmrt = classic.ub_fmrt;
    const Probability pbar = pbar_closed(d);
    row.pbar = pbar.value();
    row.vbar = beta(d, pbar).value();
    row.residual_Q = std::abs(poly_Q(d)(row.pbar));
    row.residual_R = std::abs(poly_R(d)(row.vbar));
    row.pbar_n.reserve(n_samples.size());
    for (int n : n_samples) row.pbar_n.emplace_back(n, pbar_n(d, n).value());
    return row;
}

std::vector<BoundsRow> bounds_table(Degree d_min, Degree d_max,
                                    const std::vector<int>& n_samples) {
    if (d_max.value() < d_min.value())
        throw std::invalid_argument("bounds_table requires d_min <= d_max");
    std::vector<BoundsRow> rows;
    rows.reserve(static_cast<size_t>(d_max.value() - d_min.value()) + 1);
    for (int d = d_min.value(); d <= d_max.value(); ++d)
        rows.push_back(bounds_row(Degree(d), n_samples));
    return rows;
}

const std::vector<int>& default_n_samples() {
    static const std::vector<int> samples{1, 2, 5, 10, 50, 200};
    return samples;
}

}  // namespace frogbounds
