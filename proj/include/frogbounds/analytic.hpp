#pragma once

#include "frogbounds/types.hpp"

namespace frogbounds {

/// Probability that a random walk started next to a marked vertex ever steps
/// on it, when the walk survives each step with probability p.  The hitting
/// probability of a vertex at distance k is beta^k.
BranchRatio beta(Degree d, Probability p);

/// Inverse of beta on [0, 1/d]: the survival parameter that produces decay
/// base v on the degree stored in v.
Probability beta_inverse(const BranchRatio& v);

/// sqrt(b^4 - 4b + 4); discriminant-like quantity driving the closed forms.
/// Strictly positive on [0, 1/2], so all formulas built on it stay real.
double psi(const BranchRatio& b);

/// Dominant geometric rate of the cluster-growth sequence:
/// (b/2) * (2 - b^2 + psi(b)).
double lambda_growth(const BranchRatio& b);

struct ClassicBounds {
    double ub_original;  // (d+1) / (2d)
    double ub_fmrt;      // sharper published bound this project improves on
};

/// Two previously known upper bounds for the critical parameter, used as
/// reference points when tabulating the new one.
ClassicBounds classic_bounds(Degree d);

}  // namespace frogbounds
