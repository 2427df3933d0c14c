#pragma once

#include <array>
#include <complex>
#include <functional>

#include "frogbounds/types.hpp"

namespace frogbounds {

/// Dense polynomial of degree <= 4 with Horner evaluation.
/// coeffs[k] multiplies x^k.
struct PolyEval {
    std::array<double, 5> coeffs{};
    int degree = 0;

    double operator()(double x) const noexcept {
        double acc = coeffs[static_cast<size_t>(degree)];
        for (int k = degree - 1; k >= 0; --k) acc = acc * x + coeffs[static_cast<size_t>(k)];
        return acc;
    }
};

/// Which closed form produced the resolvent constant K: the real-radical
/// (Cardano) expression for 2 <= d <= 9, the cosine expression for d >= 10.
enum class KBranch { Cardano, Trigonometric };

struct QuarticConstants {
    double Q;       // quadratic coefficient of the depressed quartic
    double R;       // linear coefficient
    double S;       // constant coefficient
    double O;       // depressed-resolvent constant term driver
    double P;       // depressed-resolvent linear term driver
    double theta;   // arccos argument angle used by the trig branch
    double K;       // positive root used to split the quartic into quadratics
    KBranch branch;
};

/// Roots z1..z4 of the depressed quartic z^4 + Q z^2 + R z + S.  For
/// 2 <= d <= 9 two of them form a conjugate complex pair; from d = 10 on all
/// four are real.
struct QuarticRoot {
    std::complex<double> z;
    bool is_real;
};

struct ReducedQuarticRoots {
    std::array<QuarticRoot, 4> z;
};

/// Degree-4 polynomial in the decay base v whose root in (0, 1/d) encodes
/// the bound: d^2 v^4 - d(d+1) v^3 + 2 d v - 1.
PolyEval poly_R(Degree d);

/// The same condition transported to the survival parameter p; the bound is
/// its unique root in (0, 1).
PolyEval poly_Q(Degree d);

/// All constants of the resolvent-based solution of poly_Q, including K and
/// the branch that produced it.
QuarticConstants descartes_constants(Degree d);

/// The bound in closed form, assembled from descartes_constants.  Guards the
/// final radicand: below -1e-12 is an internal fault, tiny negatives clamp
/// to zero.
Probability pbar_closed(Degree d);

/// Sign-deciding factor of the quartic discriminant; negative for
/// 2 <= d <= 9, positive from d = 10 on, which is what flips the K branch.
double discriminant_H0(Degree d);

/// Roots of the depressed quartic obtained from K.
ReducedQuarticRoots quartic_roots_reduced(Degree d);

/// Deterministic bisection on [lo, hi].  Endpoints evaluating exactly to
/// zero are returned as the root; otherwise the endpoint values must have
/// opposite signs or a BracketError is thrown.  Stops when the bracket is
/// narrower than tol and returns its midpoint.
double isolate_root(const std::function<double(double)>& fn, double lo, double hi, double tol);

}  // namespace frogbounds
