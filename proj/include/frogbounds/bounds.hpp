#pragma once

#include <utility>
#include <vector>

#include "frogbounds/types.hpp"

namespace frogbounds {

/// One tabulated degree: the two reference bounds, the new bound (with the
/// decay base it corresponds to), finite-n approximants, and the residuals
/// of the bound plugged back into its defining polynomials.
struct BoundsRow {
    int d = 0;
    double ub_original = 0.0;
    double ub_fmrt = 0.0;
    double pbar = 0.0;
    double vbar = 0.0;
    std::vector<std::pair<int, double>> pbar_n;  // (n, root of f_n), sorted by n
    double residual_Q = 0.0;  // |poly_Q(pbar)|
    double residual_R = 0.0;  // |poly_R(vbar)|
};

/// Root in (0, 1] of the finite-slice criterion f_n.  Decreases in n toward
/// the closed-form bound.  n = 1 gives exactly 1.
Probability pbar_n(Degree d, int n, double tol = 1e-12);

/// Assemble one table row.  n_samples must be positive and strictly
/// increasing.
BoundsRow bounds_row(Degree d, const std::vector<int>& n_samples);

/// Rows for every degree in [d_min, d_max].
std::vector<BoundsRow> bounds_table(Degree d_min, Degree d_max,
                                    const std::vector<int>& n_samples);

/// {1, 2, 5, 10, 50, 200}: the default finite-n column set.
const std::vector<int>& default_n_samples();

}  // namespace frogbounds
