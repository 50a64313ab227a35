#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covergrid {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // short human summary, deterministic
};

struct AcceptanceResult {
    std::vector<CriterionResult> criteria;  // criteria 1..8, in order
    std::string csv;                        // criterion,case,observed,expected,pass
    bool all_pass = false;
};

/// Runs acceptance criteria 1-8. Deterministic: identical seeds, orders and
/// formatting on every run. Progress notes go to `log` when non-null; the
/// CSV never contains timing or other run-varying data.
AcceptanceResult run_acceptance(std::ostream* log = nullptr);

}  // namespace covergrid
