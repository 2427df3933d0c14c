#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "frogbounds/bounds.hpp"
#include "frogbounds/sim.hpp"

namespace frogbounds {

inline constexpr const char* kSchemaVersion = "1";

enum class OutputFormat { Csv, Json };

/// One verification check: measured deviation against its pinned tolerance.
struct VerificationItem {
    std::string name;
    bool pass = false;
    double deviation = 0.0;
    double tolerance = 0.0;
};

/// Shortest-round-trip decimal at 12 significant digits, locale-independent.
/// All record writers funnel numbers through this, which is what makes CSV
/// and JSON byte-comparable.
std::string format_sig12(double x);

/// Header line(s) for a bounds table: a schema-version comment plus the
/// column row (pbar_n_<k> per requested n).
void write_bounds_csv_header(std::ostream& os, const std::vector<int>& n_samples);
void write_bounds_row_csv(std::ostream& os, const BoundsRow& row);
void write_bounds_row_json(std::ostream& os, const BoundsRow& row);

void write_estimate_csv_header(std::ostream& os);
void write_estimate_csv(std::ostream& os, const SimConfig& config, int threads,
                        const SurvivalEstimate& est);
void write_estimate_json(std::ostream& os, const SimConfig& config, int threads,
                         const SurvivalEstimate& est);

void write_verification_csv_header(std::ostream& os);
void write_verification_csv(std::ostream& os, const VerificationItem& item);
void write_verification_json(std::ostream& os, const VerificationItem& item);

}  // namespace frogbounds
