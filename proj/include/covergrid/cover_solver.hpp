#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covergrid/candidates.hpp"
#include "covergrid/grid.hpp"
#include "covergrid/ilp.hpp"
#include "covergrid/lp.hpp"

namespace covergrid {

/// Covering program for cov_k(grid, missing): one >= k row per point of the
/// grid minus the missing point, one unit-cost column per candidate.
struct CoverProblem {
    long k = 1;
    std::optional<Index> missing;
    std::vector<CoveringSet> candidates;
    LinearProgram lp;
    std::vector<int> row_point;  // grid point position per row
};

CoverProblem build_cover_problem(const Grid& g, long k, std::optional<Index> missing,
                                 const CandidateOptions& copt = {});

/// Nonnegative point weights, a dual certificate: feasible iff no admissible
/// hyperplane collects more than k weight. Paper normalization (sums bounded
/// by k, objective = sum of weights).
struct Weighting {
    std::optional<Index> missing;
    std::vector<std::pair<Index, Rat>> weights;  // sorted by index, zero omitted
    Rat objective() const;
};

struct SolveStats {
    long nodes = 0;
    long lp_pivots = 0;
    long lp_solves = 0;
    std::size_t candidates = 0;
    Rat root_lp;
    bool root_lp_known = false;
};

struct CovOptions {
    CandidateOptions candidates;
    long node_budget = 1'000'000;
    LpOptions lp{LpOptions::Pivot::dantzig};
    bool seed_incumbent = true;  // warm start from the matching construction
};

struct CovResult {
    long value = 0;
    Cover cover;
    SolveStats stats;
};

/// Exact cov_k: minimum number of hyperplanes covering every point of the
/// grid minus `missing` at least k times, none through `missing`. Throws
/// ResourceLimit when the node budget is exhausted.
CovResult cov(const Grid& g, long k, std::optional<Index> missing,
              const CovOptions& opt = {});

struct CovLpResult {
    Rat value;
    Weighting weighting;  // optimal dual, scaled so hyperplane sums stay <= k
    SolveStats stats;
};

CovLpResult cov_lp(const Grid& g, long k, std::optional<Index> missing,
                   const CovOptions& opt = {});

struct WeightingViolation {
    std::string kind;  // "singleton" | "line" | "plane"
    std::vector<Index> members;
    Rat weight_sum;
};

struct WeightingReport {
    bool ok = false;
    Rat objective;
    std::vector<WeightingViolation> violations;
};

/// Feasibility scan of a weighting against every admissible hyperplane. Only
/// hyperplanes through positively weighted points can violate, so the scan
/// enumerates planes spanned by the weight support, maximal collinear
/// support sets, and support singletons.
WeightingReport check_weighting(const Grid& g, const Weighting& w, long k,
                                bool stop_at_first = false);

}  // namespace covergrid
