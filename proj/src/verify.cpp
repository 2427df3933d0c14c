#include "frogbounds/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "frogbounds/analytic.hpp"
#include "frogbounds/bounds.hpp"
#include "frogbounds/phi.hpp"
#include "frogbounds/quartic.hpp"
#include "frogbounds/sim.hpp"

namespace frogbounds {

namespace {

constexpr int kDegreeSweepMax = 200;

VerificationItem item(std::string name, double deviation, double tolerance) {
    VerificationItem it;
    it.name = std::move(name);
    it.deviation = deviation;
    it.tolerance = tolerance;
    it.pass = deviation <= tolerance;
    return it;
}

double phi3_reference(double b) {
    return b * b * b * (4.0 - 3.0 * b - b * b + b * b * b);
}

}  // namespace

std::vector<VerificationItem> run_verification(VerifyLevel level, std::uint64_t seed) {
    std::vector<VerificationItem> out;
    const Degree d2(2);

    {
        double dev = 0.0;
        for (int i = 0; i <= 200; ++i) {
            const double b = 0.5 * static_cast<double>(i) / 200.0;
            dev = std::max(dev,
                           std::abs(phi_direct(3, BranchRatio(b, d2)) - phi3_reference(b)));
        }
        out.push_back(item("phi3-identity", dev, 1e-14));
    }

    {
        double dev = 0.0;
        for (const int dv : {2, 3, 5, 10}) {
            const Degree d(dv);
            for (int i = 0; i <= 100; ++i) {
                const double b = (1.0 / dv) * (static_cast<double>(i) / 100.0);
                const BranchRatio br(b, d);
                for (int n = 1; n <= 12; ++n) {
                    const double via_sum = phi_direct(n, br);
                    const double via_rec = phi_recurrence(n, br);
                    const double via_closed = phi_closed(n, br);
                    dev = std::max({dev, std::abs(via_sum - via_rec),
                                    std::abs(via_rec - via_closed),
                                    std::abs(via_sum - via_closed)});
                }
            }
        }
        out.push_back(item("phi-three-way", dev, 1e-11));
    }

    {
        // Characteristic roots against the recurrence coefficients they came from.
        double dev = 0.0;
        for (int i = 1; i <= 100; ++i) {
            const double b = 0.5 * static_cast<double>(i) / 100.0;
            const CharRoots cr = char_roots(BranchRatio(b, d2));
            dev = std::max(dev,
                           std::abs(cr.lambda_plus + cr.lambda_minus - b * (2.0 - b * b)));
            dev = std::max(dev,
                           std::abs(cr.lambda_plus * cr.lambda_minus - b * b * b * (1.0 - b)));
            const double gap = cr.lambda_plus - cr.lambda_minus;
            dev = std::max(dev, std::abs(gap * gap - cr.delta0));
        }
        out.push_back(item("vieta", dev, 1e-12));
    }

    {
        // exp(log_phi_scaled)/n should approach the dominant root from the
        // characteristic pair; the error must shrink along the n ladder.
        double dev = 0.0;
        for (const double b : {0.2, 0.3, 0.45}) {
            const BranchRatio br(b, d2);
            const double lam = lambda_growth(br);
            double prev = std::numeric_limits<double>::infinity();
            for (const int n : {100, 1000, 10000, 100000}) {
                const double err = std::abs(std::exp(log_phi_scaled(n, br)) - lam);
                dev = std::max(dev, err - prev);  // any increase is a violation
                if (n == 100000) dev = std::max(dev, err);
                prev = err;
            }
        }
        out.push_back(item("limit-law", dev, 1e-3));
    }

    {
        double dev_residual = 0.0;
        double dev_bisect = 0.0;
        double dev_equiv = 0.0;
        for (int dv = 2; dv <= kDegreeSweepMax; ++dv) {
            const Degree d(dv);
            const double pbar = pbar_closed(d).value();
            dev_residual = std::max(dev_residual, std::abs(poly_Q(d)(pbar)));
            dev_bisect = std::max(dev_bisect,
                                  std::abs(pbar - isolate_root(poly_Q(d), 0.0, 1.0, 1e-12)));
            dev_equiv = std::max(dev_equiv,
                                 std::abs(poly_R(d)(beta(d, Probability(pbar)).value())));
        }
        out.push_back(item("closed-form-residual", dev_residual, 1e-9));
        out.push_back(item("closed-vs-bisection", dev_bisect, 1e-9));
        out.push_back(item("equiv-residual-R", dev_equiv, 1e-9));
    }

    {
        // The two depressed-resolvent drivers are polynomial combinations of
        // the quartic coefficients; check both identities.
        double dev = 0.0;
        for (int dv = 2; dv <= kDegreeSweepMax; ++dv) {
            const QuarticConstants c = descartes_constants(Degree(dv));
            const double p_ref = -c.Q * c.Q / 144.0 - c.S / 12.0;
            const double o_ref = c.Q * c.Q * c.Q / 1728.0 - c.Q * c.S / 48.0 + c.R * c.R / 128.0;
            dev = std::max(dev, std::abs(c.P - p_ref) / std::max(std::abs(p_ref), 1e-6));
            dev = std::max(dev, std::abs(c.O - o_ref) / std::max(std::abs(o_ref), 1e-6));
        }
        out.push_back(item("resolvent-consistency", dev, 1e-10));
    }

    {
        // K^2 must be a root of the auxiliary cubic regardless of branch.
        double dev = 0.0;
        for (int dv = 2; dv <= kDegreeSweepMax; ++dv) {
            const QuarticConstants c = descartes_constants(Degree(dv));
            const double x = c.K * c.K;
            const double res = x * x * x + 0.5 * c.Q * x * x +
                               (c.Q * c.Q - 4.0 * c.S) / 16.0 * x - c.R * c.R / 64.0;
            dev = std::max(dev, std::abs(res));
        }
        out.push_back(item("resolvent-root-residual", dev, 1e-9));
    }

    {
        int violations = 0;
        for (int dv = 2; dv <= kDegreeSweepMax; ++dv) {
            const Degree d(dv);
            const bool low = dv <= 9;
            const double h0 = discriminant_H0(d);
            if (low ? h0 >= 0.0 : h0 <= 0.0) ++violations;
            const QuarticConstants c = descartes_constants(d);
            if ((c.branch == KBranch::Cardano) != low) ++violations;
            const ReducedQuarticRoots roots = quartic_roots_reduced(d);
            if (roots.z[2].is_real == low || roots.z[3].is_real == low) ++violations;
        }
        out.push_back(item("discriminant-branch", violations, 0.0));
    }

    {
        // Exactly one root of the p-space quartic may land in (0, 1).
        int violations = 0;
        for (int dv = 2; dv <= kDegreeSweepMax; ++dv) {
            const Degree d(dv);
            const double shift = (dv + 1.0) / (3.0 * dv + 1.0);
            const ReducedQuarticRoots roots = quartic_roots_reduced(d);
            int inside = 0;
            for (const QuarticRoot& r : roots.z) {
                if (!r.is_real) continue;
                const double p = r.z.real() + shift;
                if (p > 0.0 && p < 1.0) ++inside;
            }
            if (inside != 1) ++violations;
        }
        out.push_back(item("quartic-root-uniqueness", violations, 0.0));
    }

    {
        double dev = 0.0;
        for (int dv = 2; dv <= kDegreeSweepMax; ++dv) {
            const Degree d(dv);
            const ClassicBounds classic = classic_bounds(d);
            const double pbar = pbar_closed(d).value();
            dev = std::max(dev, pbar - classic.ub_fmrt);
            dev = std::max(dev, classic.ub_fmrt - classic.ub_original);
        }
        out.push_back(item("bound-chain", std::max(dev, 0.0), 0.0));
    }

    {
        double dev = 0.0;
        for (const int dv : {2, 3, 5, 10})
            dev = std::max(dev, std::abs(pbar_n(Degree(dv), 1).value() - 1.0));
        out.push_back(item("pbar-1-exact", dev, 1e-12));
    }

    {
        double dev = 0.0;
        for (const int dv : {2, 3, 5, 10}) {
            const Degree d(dv);
            const double pbar = pbar_closed(d).value();
            double prev = std::numeric_limits<double>::infinity();
            for (const int n : {10, 50, 200}) {
                const double err = std::abs(pbar_n(d, n).value() - pbar);
                dev = std::max(dev, err - prev);
                if (n == 200) dev = std::max(dev, err);
                prev = err;
            }
        }
        out.push_back(item("pbar-n-convergence", dev, 1e-2));
    }

    if (level == VerifyLevel::Full) {
        const Probability p07(0.7);
        const BranchRatio b = beta(d2, p07);

        for (int n = 1; n <= 3; ++n) {
            const SurvivalEstimate est =
                estimate_hit_probability(d2, p07, n, 200'000, seed + static_cast<std::uint64_t>(n));
            const double target = std::pow(b.value(), n);
            out.push_back(item("hit-prob-n" + std::to_string(n), std::abs(est.point - target),
                               4.0 * est.ci95_halfwidth));
        }
        for (int n = 1; n <= 4; ++n) {
            const SurvivalEstimate est = estimate_child_probability(
                d2, p07, n, 200'000, seed + 10 + static_cast<std::uint64_t>(n));
            const double target = phi_recurrence(n, b);
            out.push_back(item("child-prob-n" + std::to_string(n), std::abs(est.point - target),
                               4.0 * est.ci95_halfwidth));
        }
        for (int n = 1; n <= 2; ++n) {
            const MeanEstimate est = simulate_branching_offspring(
                d2, p07, n, 20'000, seed + 20 + static_cast<std::uint64_t>(n));
            const double target = std::pow(2.0, n) * phi_recurrence(n, b);
            out.push_back(item("offspring-mean-n" + std::to_string(n),
                               std::abs(est.mean - target), 4.0 * est.ci95_halfwidth));
        }
        {
            SimConfig dead(d2, Probability(0.0));
            dead.trials = 1000;
            dead.seed = seed;
            SimConfig immortal(d2, Probability(1.0));
            immortal.trials = 1000;
            immortal.awake_cap = 10'000;
            immortal.seed = seed;
            const double dev = std::abs(simulate_frog_model(dead).point) +
                               std::abs(simulate_frog_model(immortal).point - 1.0);
            out.push_back(item("survival-endpoints", dev, 0.0));
        }
        {
            SimConfig cfg(d2, Probability(0.6));
            cfg.trials = 2000;
            cfg.horizon = 100;
            cfg.awake_cap = 10'000;
            cfg.seed = seed;
            std::ostringstream serial;
            write_estimate_csv(serial, cfg, 1, simulate_frog_model(cfg, 1));
            std::ostringstream reserial;
            write_estimate_csv(reserial, cfg, 1, simulate_frog_model(cfg, 4));
            out.push_back(item("survival-thread-invariance",
                               serial.str() == reserial.str() ? 0.0 : 1.0, 0.0));
        }
    }

    return out;
}

}  // namespace frogbounds
