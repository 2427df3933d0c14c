#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "frogbounds/bounds.hpp"
#include "frogbounds/records.hpp"
#include "frogbounds/sim.hpp"
#include "frogbounds/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumericOrIo = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitVerifyFailed = 3;

// Write through the callback to --out or stdout; any stream failure is an
// I/O error, never a partial success.
int emit(const std::string& out_path, const std::function<void(std::ostream&)>& writer) {
    if (out_path.empty()) {
        writer(std::cout);
        std::cout.flush();
        return std::cout.good() ? kExitOk : kExitNumericOrIo;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return kExitNumericOrIo;
    }
    writer(os);
    os.flush();
    return os.good() ? kExitOk : kExitNumericOrIo;
}

struct BoundArgs {
    int d = 2;
    std::vector<int> n_samples;
    std::string format = "csv";
    std::string out;
};

struct ScanArgs {
    int d_min = 2;
    int d_max = 2;
    std::vector<int> n_samples;
    std::string format = "csv";
    std::string out;
};

struct SimulateArgs {
    int d = 2;
    double p = 0.5;
    int horizon = 200;
    std::int64_t trials = 10'000;
    std::int64_t cap = 1'000'000;
    std::uint64_t seed = 1;
    int threads = 1;
    std::string format = "csv";
    std::string out;
};

struct VerifyArgs {
    std::string level = "fast";
    std::uint64_t seed = 1;
    std::string format = "csv";
    std::string out;
};

int run_bound(const BoundArgs& args) {
    const std::vector<int>& samples =
        args.n_samples.empty() ? frogbounds::default_n_samples() : args.n_samples;
    const frogbounds::BoundsRow row = frogbounds::bounds_row(frogbounds::Degree(args.d), samples);
    return emit(args.out, [&](std::ostream& os) {
        if (args.format == "csv") {
            frogbounds::write_bounds_csv_header(os, samples);
            frogbounds::write_bounds_row_csv(os, row);
        } else {
            frogbounds::write_bounds_row_json(os, row);
        }
    });
}

int run_scan(const ScanArgs& args) {
    const std::vector<int>& samples =
        args.n_samples.empty() ? frogbounds::default_n_samples() : args.n_samples;
    const std::vector<frogbounds::BoundsRow> rows = frogbounds::bounds_table(
        frogbounds::Degree(args.d_min), frogbounds::Degree(args.d_max), samples);
    return emit(args.out, [&](std::ostream& os) {
        if (args.format == "csv") {
            frogbounds::write_bounds_csv_header(os, samples);
            for (const auto& row : rows) frogbounds::write_bounds_row_csv(os, row);
        } else {
            for (const auto& row : rows) frogbounds::write_bounds_row_json(os, row);
        }
    });
}

int run_simulate(const SimulateArgs& args) {
    frogbounds::SimConfig cfg(frogbounds::Degree(args.d), frogbounds::Probability(args.p));
    cfg.horizon = args.horizon;
    cfg.awake_cap = args.cap;
    cfg.trials = args.trials;
    cfg.seed = args.seed;
    cfg.validate();
    if (args.threads < 1) throw std::domain_error("--threads must be >= 1");
    const frogbounds::SurvivalEstimate est = frogbounds::simulate_frog_model(cfg, args.threads);
    return emit(args.out, [&](std::ostream& os) {
        if (args.format == "csv") {
            frogbounds::write_estimate_csv_header(os);
            frogbounds::write_estimate_csv(os, cfg, args.threads, est);
        } else {
            frogbounds::write_estimate_json(os, cfg, args.threads, est);
        }
    });
}

int run_verify(const VerifyArgs& args) {
    const frogbounds::VerifyLevel level = args.level == "full" ? frogbounds::VerifyLevel::Full
                                                               : frogbounds::VerifyLevel::Fast;
    const std::vector<frogbounds::VerificationItem> items =
        frogbounds::run_verification(level, args.seed);
    const int rc = emit(args.out, [&](std::ostream& os) {
        if (args.format == "csv") {
            frogbounds::write_verification_csv_header(os);
            for (const auto& it : items) frogbounds::write_verification_csv(os, it);
        } else {
            for (const auto& it : items) frogbounds::write_verification_json(os, it);
        }
    });
    if (rc != kExitOk) return rc;
    for (const auto& it : items)
        if (!it.pass) return kExitVerifyFailed;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Upper bounds for the critical parameter of frogs on regular trees"};
    app.require_subcommand(1);

    BoundArgs bound_args;
    auto* bound = app.add_subcommand("bound", "Bound panel for one degree");
    bound->add_option("--d", bound_args.d, "Tree degree parameter (>= 2)")->required();
    bound->add_option("--n", bound_args.n_samples,
                      "Finite-n sample points (default: 1 2 5 10 50 200)");
    bound->add_option("--format", bound_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    bound->add_option("--out", bound_args.out, "Output path (default: stdout)");

    ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan", "Bound table over a degree range");
    scan->add_option("--d-min", scan_args.d_min, "First degree")->required();
    scan->add_option("--d-max", scan_args.d_max, "Last degree")->required();
    scan->add_option("--n", scan_args.n_samples,
                     "Finite-n sample points (default: 1 2 5 10 50 200)");
    scan->add_option("--format", scan_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("--out", scan_args.out, "Output path (default: stdout)");

    SimulateArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo survival frequency");
    simulate->add_option("--d", sim_args.d, "Tree degree parameter (>= 2)")->required();
    simulate->add_option("--p", sim_args.p, "Per-step survival probability")->required();
    simulate->add_option("--horizon", sim_args.horizon, "Steps per replica (default 200)");
    simulate->add_option("--trials", sim_args.trials, "Number of replicas (default 10000)");
    simulate->add_option("--cap", sim_args.cap,
                         "Awake-count early exit, counted as survival (default 1000000)");
    simulate->add_option("--seed", sim_args.seed, "RNG seed (default 1)");
    simulate->add_option("--threads", sim_args.threads, "Worker threads (default 1)");
    simulate->add_option("--format", sim_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    simulate->add_option("--out", sim_args.out, "Output path (default: stdout)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Cross-check suite");
    verify->add_option("--level", verify_args.level, "fast: closed forms; full: adds Monte Carlo")
        ->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--seed", verify_args.seed, "RNG seed for the full level (default 1)");
    verify->add_option("--format", verify_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--out", verify_args.out, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitBadArguments;
    }

    try {
        if (bound->parsed()) return run_bound(bound_args);
        if (scan->parsed()) return run_scan(scan_args);
        if (simulate->parsed()) return run_simulate(sim_args);
        return run_verify(verify_args);
    } catch (const frogbounds::NumericGuardError& e) {
        std::cerr << "numeric guard: " << e.what() << "\n";
        return kExitNumericOrIo;
    } catch (const frogbounds::BracketError& e) {
        std::cerr << "bracket failure: " << e.what() << "\n";
        return kExitNumericOrIo;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumericOrIo;
    }
}
