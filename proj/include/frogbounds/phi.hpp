#pragma once

#include "frogbounds/analytic.hpp"
#include "frogbounds/types.hpp"

namespace frogbounds {

/// Which of the three equivalent evaluations of phi_n to run.  They agree to
/// rounding error; keeping all three alive is what lets the verification
/// suite cross-check them.
enum class PhiForm { Direct, Recurrence, Closed };

/// Ingredients of the closed form: phi_n = c1*lambda_minus^n + c2*lambda_plus^n.
struct CharRoots {
    double lambda_minus;
    double lambda_plus;
    double delta0;  // b^2 * (4 - 4b + b^4), the recurrence discriminant
    double c1;
    double c2;
};

/// Inductive sum over the index of the first gap in the visit prefix.
/// O(n^2); n is capped at 2000 to keep that honest.  Requires n >= 1.
double phi_direct(int n, const BranchRatio& b);

/// Linear two-term recurrence phi_n = b(2-b^2) phi_{n-1} - b^3(1-b) phi_{n-2},
/// phi_0 = 1, phi_1 = b.  Requires n >= 0.
double phi_recurrence(int n, const BranchRatio& b);

/// Explicit solution of the recurrence through its characteristic roots.
/// Requires n >= 0.
double phi_closed(int n, const BranchRatio& b);

/// Evaluate phi_n by the chosen form (preconditions of that form apply).
double phi(PhiForm form, int n, const BranchRatio& b);

/// Characteristic roots and mixing weights of the recurrence.  Rejects b = 0,
/// where the weights degenerate.
CharRoots char_roots(const BranchRatio& b);

/// (1/n) * log(phi_n), computed by accumulating logs of consecutive ratios so
/// it stays finite long after phi_n itself underflows.  Requires n >= 1 and
/// rejects b = 0.
double log_phi_scaled(int n, const BranchRatio& b);

/// Finite-slice criterion function  f_n(p) = phi_n(beta(p))^(1/n) - 1/d.
/// Uses the log-scaled path for n > 50.  f_n(0) = -1/d for every n.
double f_n(Degree d, int n, Probability p);

/// Limit of f_n as n grows: lambda_growth(beta(p)) - 1/d.
double f_limit(Degree d, Probability p);

}  // namespace frogbounds
