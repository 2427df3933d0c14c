#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "frogbounds/analytic.hpp"
#include "frogbounds/bounds.hpp"
#include "frogbounds/phi.hpp"
#include "frogbounds/quartic.hpp"
#include "frogbounds/records.hpp"
#include "frogbounds/sim.hpp"
#include "frogbounds/verify.hpp"

namespace py = pybind11;
using namespace frogbounds;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Upper bounds for the critical survival parameter of the frog model "
              "on homogeneous trees: closed forms, finite-n roots, and seeded "
              "Monte Carlo cross-checks.";

    py::register_exception<NumericGuardError>(m, "NumericGuardError");
    py::register_exception<BracketError>(m, "BracketError");

    py::class_<Degree>(m, "Degree")
        .def(py::init<int>(), py::arg("d"))
        .def_property_readonly("value", &Degree::value)
        .def("__eq__", [](Degree a, Degree b) { return a == b; }, py::is_operator())
        .def("__repr__",
             [](Degree d) { return "Degree(" + std::to_string(d.value()) + ")"; });
    py::implicitly_convertible<py::int_, Degree>();

    py::class_<Probability>(m, "Probability")
        .def(py::init<double>(), py::arg("p"))
        .def_property_readonly("value", &Probability::value)
        .def("__repr__",
             [](const Probability& p) { return "Probability(" + format_sig12(p.value()) + ")"; });
    py::implicitly_convertible<py::float_, Probability>();

    py::class_<BranchRatio>(m, "BranchRatio")
        .def(py::init<double, Degree>(), py::arg("b"), py::arg("d"))
        .def_property_readonly("value", &BranchRatio::value)
        .def_property_readonly("degree", &BranchRatio::degree)
        .def("__repr__", [](const BranchRatio& b) {
            return "BranchRatio(" + format_sig12(b.value()) + ", d=" +
                   std::to_string(b.degree().value()) + ")";
        });

    py::class_<ClassicBounds>(m, "ClassicBounds")
        .def_readonly("ub_original", &ClassicBounds::ub_original)
        .def_readonly("ub_fmrt", &ClassicBounds::ub_fmrt);

    py::enum_<PhiForm>(m, "PhiForm")
        .value("Direct", PhiForm::Direct)
        .value("Recurrence", PhiForm::Recurrence)
        .value("Closed", PhiForm::Closed);

    py::class_<CharRoots>(m, "CharRoots")
        .def_readonly("lambda_minus", &CharRoots::lambda_minus)
        .def_readonly("lambda_plus", &CharRoots::lambda_plus)
        .def_readonly("delta0", &CharRoots::delta0)
        .def_readonly("c1", &CharRoots::c1)
        .def_readonly("c2", &CharRoots::c2);

    py::class_<PolyEval>(m, "PolyEval")
        .def_readonly("coeffs", &PolyEval::coeffs)
        .def_readonly("degree", &PolyEval::degree)
        .def("__call__", &PolyEval::operator(), py::arg("x"));

    py::enum_<KBranch>(m, "KBranch")
        .value("Cardano", KBranch::Cardano)
        .value("Trigonometric", KBranch::Trigonometric);

    py::class_<QuarticConstants>(m, "QuarticConstants")
        .def_readonly("Q", &QuarticConstants::Q)
        .def_readonly("R", &QuarticConstants::R)
        .def_readonly("S", &QuarticConstants::S)
        .def_readonly("O", &QuarticConstants::O)
        .def_readonly("P", &QuarticConstants::P)
        .def_readonly("theta", &QuarticConstants::theta)
        .def_readonly("K", &QuarticConstants::K)
        .def_readonly("branch", &QuarticConstants::branch);

    py::class_<QuarticRoot>(m, "QuarticRoot")
        .def_readonly("z", &QuarticRoot::z)
        .def_readonly("is_real", &QuarticRoot::is_real);

    py::class_<ReducedQuarticRoots>(m, "ReducedQuarticRoots")
        .def_readonly("z", &ReducedQuarticRoots::z);

    py::class_<BoundsRow>(m, "BoundsRow")
        .def_readonly("d", &BoundsRow::d)
        .def_readonly("ub_original", &BoundsRow::ub_original)
        .def_readonly("ub_fmrt", &BoundsRow::ub_fmrt)
        .def_readonly("pbar", &BoundsRow::pbar)
        .def_readonly("vbar", &BoundsRow::vbar)
        .def_readonly("pbar_n", &BoundsRow::pbar_n)
        .def_readonly("residual_Q", &BoundsRow::residual_Q)
        .def_readonly("residual_R", &BoundsRow::residual_R);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<Degree, Probability>(), py::arg("d"), py::arg("p"))
        .def_readonly("d", &SimConfig::d)
        .def_readonly("p", &SimConfig::p)
        .def_readwrite("horizon", &SimConfig::horizon)
        .def_readwrite("awake_cap", &SimConfig::awake_cap)
        .def_readwrite("trials", &SimConfig::trials)
        .def_readwrite("seed", &SimConfig::seed)
        .def("validate", &SimConfig::validate);

    py::class_<SurvivalEstimate>(m, "SurvivalEstimate")
        .def_readonly("trials", &SurvivalEstimate::trials)
        .def_readonly("successes", &SurvivalEstimate::successes)
        .def_readonly("point", &SurvivalEstimate::point)
        .def_readonly("ci95_halfwidth", &SurvivalEstimate::ci95_halfwidth);

    py::class_<MeanEstimate>(m, "MeanEstimate")
        .def_readonly("trials", &MeanEstimate::trials)
        .def_readonly("mean", &MeanEstimate::mean)
        .def_readonly("ci95_halfwidth", &MeanEstimate::ci95_halfwidth);

    py::class_<ReachSample>(m, "ReachSample")
        .def(py::init([](std::vector<int> advance) {
                 ReachSample s;
                 s.advance = std::move(advance);
                 return s;
             }),
             py::arg("advance"))
        .def_readwrite("advance", &ReachSample::advance);

    py::class_<VerificationItem>(m, "VerificationItem")
        .def_readonly("name", &VerificationItem::name)
        .def_readonly("passed", &VerificationItem::pass)
        .def_readonly("deviation", &VerificationItem::deviation)
        .def_readonly("tolerance", &VerificationItem::tolerance);

    py::enum_<VerifyLevel>(m, "VerifyLevel")
        .value("Fast", VerifyLevel::Fast)
        .value("Full", VerifyLevel::Full);

    m.def("beta", &beta, py::arg("d"), py::arg("p"));
    m.def("beta_inverse", &beta_inverse, py::arg("v"));
    m.def("psi", &psi, py::arg("b"));
    m.def("lambda_growth", &lambda_growth, py::arg("b"));
    m.def("classic_bounds", &classic_bounds, py::arg("d"));

    m.def("phi_direct", &phi_direct, py::arg("n"), py::arg("b"));
    m.def("phi_recurrence", &phi_recurrence, py::arg("n"), py::arg("b"));
    m.def("phi_closed", &phi_closed, py::arg("n"), py::arg("b"));
    m.def("phi", &phi, py::arg("form"), py::arg("n"), py::arg("b"));
    m.def("char_roots", &char_roots, py::arg("b"));
    m.def("log_phi_scaled", &log_phi_scaled, py::arg("n"), py::arg("b"));
    m.def("f_n", &f_n, py::arg("d"), py::arg("n"), py::arg("p"));
    m.def("f_limit", &f_limit, py::arg("d"), py::arg("p"));

    m.def("poly_R", &poly_R, py::arg("d"));
    m.def("poly_Q", &poly_Q, py::arg("d"));
    m.def("descartes_constants", &descartes_constants, py::arg("d"));
    m.def("pbar_closed", &pbar_closed, py::arg("d"));
    m.def("discriminant_H0", &discriminant_H0, py::arg("d"));
    m.def("quartic_roots_reduced", &quartic_roots_reduced, py::arg("d"));
    m.def("isolate_root", &isolate_root, py::arg("fn"), py::arg("lo"), py::arg("hi"),
          py::arg("tol"));

    m.def("pbar_n", &pbar_n, py::arg("d"), py::arg("n"), py::arg("tol") = 1e-12);
    m.def("bounds_row", &bounds_row, py::arg("d"), py::arg("n_samples"));
    m.def("bounds_table", &bounds_table, py::arg("d_min"), py::arg("d_max"),
          py::arg("n_samples"));
    m.def("default_n_samples", &default_n_samples);

    m.def("simulate_frog_model", &simulate_frog_model, py::arg("config"),
          py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
    m.def("estimate_hit_probability", &estimate_hit_probability, py::arg("d"), py::arg("p"),
          py::arg("n"), py::arg("trials"), py::arg("seed"),
          py::call_guard<py::gil_scoped_release>());
    m.def("child_event_from_reaches", &child_event_from_reaches, py::arg("reaches"));
    m.def("estimate_child_probability", &estimate_child_probability, py::arg("d"), py::arg("p"),
          py::arg("n"), py::arg("trials"), py::arg("seed"),
          py::call_guard<py::gil_scoped_release>());
    m.def("simulate_branching_offspring", &simulate_branching_offspring, py::arg("d"),
          py::arg("p"), py::arg("n"), py::arg("trials"), py::arg("seed"),
          py::call_guard<py::gil_scoped_release>());

    m.def("run_verification", &run_verification, py::arg("level"), py::arg("seed") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("format_sig12", &format_sig12, py::arg("x"));
}
