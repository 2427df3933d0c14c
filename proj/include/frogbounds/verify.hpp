#pragma once

#include <cstdint>
#include <vector>

#include "frogbounds/records.hpp"

namespace frogbounds {

/// Fast: deterministic closed-form cross-checks only.  Full: adds the Monte
/// Carlo estimator consistency checks (seeded, so still reproducible).
enum class VerifyLevel { Fast, Full };

/// Run the cross-check suite.  Each item compares two independent routes to
/// the same quantity and records the measured deviation against its pinned
/// tolerance.
std::vector<VerificationItem> run_verification(VerifyLevel level, std::uint64_t seed);

}  // namespace frogbounds
