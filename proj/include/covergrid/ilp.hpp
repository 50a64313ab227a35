#pragma once

#include <optional>
#include <vector>

#include "covergrid/lp.hpp"

namespace covergrid {

enum class IlpStatus { optimal, infeasible, budget_exceeded };

struct IlpSolution {
    IlpStatus status = IlpStatus::optimal;
    std::vector<Rat> assignment;  // integral values when optimal
    Rat objective;
    Rat best_bound;   // proven lower bound on the integer optimum
    Rat root_lp;      // root relaxation value (when the root solved)
    bool root_lp_known = false;
    long nodes = 0;
    long lp_pivots = 0;
    long lp_solves = 0;
};

struct IlpOptions {
    long node_budget = 1'000'000;
    LpOptions lp{LpOptions::Pivot::dantzig};
    /// Warm-start incumbent; must be integral and feasible.
    std::optional<std::vector<Rat>> incumbent;
};

/// Exact branch-and-bound over all-integer variables of a minimization
/// program. Branches on the most fractional variable (ties to the lowest
/// column index), explores depth-first with the up branch first, and prunes
/// with ceil-strengthened relaxation bounds when every cost is an integer.
IlpSolution ilp_solve(const LinearProgram& p, const IlpOptions& opt = {});

}  // namespace covergrid
