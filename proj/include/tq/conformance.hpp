#pragma once

#include <string>
#include <vector>

#include "tq/wigner.hpp"

namespace tq {

enum class CheckStatus { Pass, Fail, PaperInconsistent };

/// One conformance check: a published reference value (or measured property)
/// against what this implementation computes. `PaperInconsistent` marks the
/// documented defects in the published values themselves; those never fail
/// the run.
struct ConformanceCheck {
    std::string id;
    std::string description;
    std::string expected;
    std::string computed;
    double tolerance = 0.0;
    CheckStatus status = CheckStatus::Pass;
};

struct ConformanceReport {
    std::vector<ConformanceCheck> checks;

    bool all_passed() const;
    std::size_t count(CheckStatus status) const;
};

const char* to_string(CheckStatus status);

/// Runs the full reference-value catalog under the given Wigner convention.
/// The golden values were published under the fractional convention; running
/// with GrossInverseTwo is supported for comparison and will fail the Wigner
/// block.
ConformanceReport run_conformance(WignerConvention conv);

}  // namespace tq
