"""Upper bounds for the critical survival parameter of the frog model on
homogeneous trees: closed forms, finite-n roots, and seeded Monte Carlo
cross-checks.  Everything is implemented in the C++ core; this package
re-exports it."""

from ._core import (
    BoundsRow,
    BracketError,
    BranchRatio,
    CharRoots,
    ClassicBounds,
    Degree,
    KBranch,
    MeanEstimate,
    NumericGuardError,
    PhiForm,
    PolyEval,
    Probability,
    QuarticConstants,
    QuarticRoot,
    ReachSample,
    ReducedQuarticRoots,
    SimConfig,
    SurvivalEstimate,
    VerificationItem,
    VerifyLevel,
    beta,
    beta_inverse,
    bounds_row,
    bounds_table,
    char_roots,
    child_event_from_reaches,
    classic_bounds,
    default_n_samples,
    descartes_constants,
    discriminant_H0,
    estimate_child_probability,
    estimate_hit_probability,
    f_limit,
    f_n,
    format_sig12,
    isolate_root,
    lambda_growth,
    log_phi_scaled,
    pbar_closed,
    pbar_n,
    phi,
    phi_closed,
    phi_direct,
    phi_recurrence,
    poly_Q,
    poly_R,
    psi,
    quartic_roots_reduced,
    run_verification,
    simulate_branching_offspring,
    simulate_frog_model,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsRow",
    "BracketError",
    "BranchRatio",
    "CharRoots",
    "ClassicBounds",
    "Degree",
    "KBranch",
    "MeanEstimate",
    "NumericGuardError",
    "PhiForm",
    "PolyEval",
    "Probability",
    "QuarticConstants",
    "QuarticRoot",
    "ReachSample",
    "ReducedQuarticRoots",
    "SimConfig",
    "SurvivalEstimate",
    "VerificationItem",
    "VerifyLevel",
    "beta",
    "beta_inverse",
    "bounds_row",
    "bounds_table",
    "char_roots",
    "child_event_from_reaches",
    "classic_bounds",
    "default_n_samples",
    "descartes_constants",
    "discriminant_H0",
    "estimate_child_probability",
    "estimate_hit_probability",
    "f_limit",
    "f_n",
    "format_sig12",
    "isolate_root",
    "lambda_growth",
    "log_phi_scaled",
    "pbar_closed",
    "pbar_n",
    "phi",
    "phi_closed",
    "phi_direct",
    "phi_recurrence",
    "poly_Q",
    "poly_R",
    "psi",
    "quartic_roots_reduced",
    "run_verification",
    "simulate_branching_offspring",
    "simulate_frog_model",
]
