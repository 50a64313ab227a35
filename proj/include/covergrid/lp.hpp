#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covergrid/rational.hpp"

namespace covergrid {

enum class Sense { le, ge, eq };

struct LpRow {
    std::vector<std::pair<int, Rat>> terms;  // (variable, coefficient), sorted by variable
    Sense sense = Sense::ge;
    Rat rhs;
    std::string name;
};

/// Linear program over exact rationals: optimize costs.x subject to rows,
/// variables nonnegative. Minimization unless `maximize` is set.
struct LinearProgram {
    bool maximize = false;
    std::vector<Rat> costs;
    std::vector<LpRow> rows;
    std::vector<std::string> var_names;  // optional, x<j> when empty

    int num_vars() const { return static_cast<int>(costs.size()); }
    std::string var_name(int j) const;
    void validate() const;  // throws BadInput
};

enum class LpStatus { optimal, infeasible, unbounded };

/// Exact solution. On `optimal`, primal and duals certify each other: the
/// objective equals costs.primal equals rhs.duals with zero gap. On
/// `infeasible`, duals holds a Farkas certificate; on `unbounded`, primal
/// holds an improving ray.
struct LpSolution {
    LpStatus status = LpStatus::optimal;
    std::vector<Rat> primal;
    std::vector<Rat> duals;
    Rat objective;
    long pivots = 0;
};

struct LpOptions {
    enum class Pivot { bland, dantzig };
    /// Bland's rule terminates on every input; dantzig picks the most
    /// negative reduced cost for speed and falls back to bland after a
    /// degeneracy-guard number of pivots.
    Pivot pivot = Pivot::bland;
    long pivot_limit = 4'000'000;
};

LpSolution lp_solve(const LinearProgram& p, const LpOptions& opt = {});

/// Textbook dual of a covering-form program (min, >= rows, nonnegative
/// variables): maximize rhs.y subject to, per variable, sum of its column
/// coefficients times y bounded by its cost, y >= 0.
LinearProgram dual_of(const LinearProgram& p);

/// Plain-text export, objective first, one row per line:
///   name: <coeff> <var> ... <sense> <rhs>
std::string lp_to_text(const LinearProgram& p);

}  // namespace covergrid
