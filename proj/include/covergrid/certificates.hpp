#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covergrid/cover_solver.hpp"
#include "covergrid/grid.hpp"

namespace covergrid {

/// Row-count lower bound: (n-t+1)k + l0(1 - sum_{i=t}^{n} 1/beta_i) for a
/// point set whose sorted row profile is betas (nondecreasing), when a cover
/// uses l0 non-row lines. Requires beta_t >= l0/k.
Rat lemma_bound(const std::vector<long>& betas, long k, long l0, int t);

/// Integer-strengthened variant minimized over l0: the least possible value
/// of l0 + sum_i max(0, ceil(k - l0/beta_i)), a valid lower bound on cov_k
/// for any point set with the given row profile.
Rat lemma_opt_bound(const std::vector<long>& betas, long k);

/// nk(1 - e^{1/(2n)-1} - 1/n), the closed-form conical lower bound
/// (floating point, asymptotic).
double conical_closed_form(long n, long k);

/// Row profile beta_i = 1 + floor((i-1)(n-1)/(m-1)) of the m x n half-grid.
std::vector<long> halfgrid_profile(long m, long n);

/// mk(1 - e^{-n/m}); leading term only, the O(n/m^2) correction is omitted.
double halfgrid_closed_form(long m, long n, long k);

/// Per-row point counts of a 2D grid (rows = second-axis values), sorted
/// ascending; the profile Lemma-type bounds consume.
std::vector<long> row_profile(const Grid& g);

/// Weight k/2 on the nonzero boundary points and the anti-diagonal
/// (a_i, b_{n-1-i}); feasible for missing = vertex with objective 3nk/2 - 2k.
Weighting weighting_generic2(const Grid& g, long k);

/// 3D dual weighting for missing = origin: k/3 on nonzero axis points, k/6
/// on front-face points with exactly one zero coordinate (index sum n), and
/// (k/n^2)(|r-n/3|+|s-n/3|+|t-n/3|) on interior front-face points with
/// max index <= 2n/3. With literal_faces, k/6 goes on every point with
/// exactly one zero coordinate — the reading that breaks dual feasibility.
Weighting weighting_generic3(const Grid& g, long k, bool literal_faces = false);

struct BoundResult {
    std::string method;
    bool exact = false;   // exact Rat value vs floating closed form
    Rat exact_value;
    double approx = 0.0;
    std::string params;
    std::string note;
};

struct BoundReportOptions {
    bool include_lp = true;
    std::size_t lp_max_points = 64;
    std::optional<long> ilp_value;  // tabulated when already computed
};

/// Evaluates every bound applicable to the grid kind and tabulates it
/// together with construction sizes and (optionally) the LP/ILP values.
std::vector<BoundResult> bound_report(const Grid& g, long k,
                                      const BoundReportOptions& opt = {});

}  // namespace covergrid
