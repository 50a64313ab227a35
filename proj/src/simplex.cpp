#include <algorithm>
#include <sstream>

#include "covergrid/errors.hpp"
#include "covergrid/lp.hpp"

// Two-phase revised primal simplex with a dense exact basis inverse.
// Variable order is fixed (structural, then slack/surplus, then artificial),
// ratio ties break on the smallest basic variable index, so a run is fully
// deterministic and Bland's rule is anti-cycling.

namespace covergrid {

std::string LinearProgram::var_name(int j) const {
    if (j < static_cast<int>(var_names.size()) && !var_names[j].empty())
        return var_names[j];
    return "x" + std::to_string(j);
}

void LinearProgram::validate() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        int prev = -1;
        for (const auto& [j, v] : r.terms) {
            if (j < 0 || j >= num_vars())
                throw BadInput("LinearProgram: term variable out of range in row " +
                               std::to_string(i));
            if (j <= prev)
                throw BadInput("LinearProgram: row terms not sorted/unique in row " +
                               std::to_string(i));
            (void)v;
            prev = j;
        }
    }
}

namespace {

struct Tableau {
    int m = 0;                // rows
    int n_total = 0;          // structural + slack + artificial
    int n_real = 0;           // structural + slack (artificials excluded)
    std::vector<std::vector<std::pair<int, Rat>>> cols;  // sparse columns
    std::vector<Rat> cost;                               // phase-2 costs
    std::vector<Rat> b;                                  // >= 0
    std::vector<int> basis;                              // var per row
    std::vector<std::vector<Rat>> binv;                  // dense m x m
    std::vector<Rat> xb;                                 // basic values
    long pivots = 0;

    void pivot(int enter, const std::vector<Rat>& w, int leave_row) {
        const Rat piv = w[leave_row];
        auto& brow = binv[leave_row];
        for (auto& v : brow) v /= piv;
        xb[leave_row] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave_row || w[i].is_zero()) continue;
            const Rat f = w[i];
            for (int r = 0; r < m; ++r) binv[i][r] -= f * brow[r];
            xb[i] -= f * xb[leave_row];
        }
        basis[leave_row] = enter;
        ++pivots;
    }

    std::vector<Rat> multiply_binv(int col) const {
        std::vector<Rat> w(m);
        for (const auto& [r, v] : cols[col])
            for (int i = 0; i < m; ++i)
                if (!binv[i][r].is_zero()) w[i] += binv[i][r] * v;
        return w;
    }

    std::vector<Rat> dual_y(const std::vector<Rat>& c) const {
        std::vector<Rat> y(m);
        for (int i = 0; i < m; ++i) {
            const Rat& ci = c[basis[i]];
            if (ci.is_zero()) continue;
            for (int r = 0; r < m; ++r)
                if (!binv[i][r].is_zero()) y[r] += ci * binv[i][r];
        }
        return y;
    }
};

enum class PhaseResult { optimal, unbounded };

// Minimize c over the tableau; `allowed` masks enterable columns.
PhaseResult run_simplex(Tableau& t, const std::vector<Rat>& c,
                        const std::vector<bool>& allowed, const LpOptions& opt,
                        int& unbounded_col, std::vector<Rat>& unbounded_dir) {
    const bool dantzig = opt.pivot == LpOptions::Pivot::dantzig;
    const long guard = 2000 + 40L * (t.m + t.n_total);
    while (true) {
        if (t.pivots > opt.pivot_limit)
            throw ResourceLimit("lp_solve: pivot limit exceeded");
        const bool use_bland = !dantzig || t.pivots > guard;
        std::vector<Rat> y = t.dual_y(c);
        int enter = -1;
        Rat best;
        for (int j = 0; j < t.n_total; ++j) {
            if (!allowed[j]) continue;
            Rat d = c[j];
            for (const auto& [r, v] : t.cols[j])
                if (!y[r].is_zero()) d -= y[r] * v;
            if (d.sign() >= 0) continue;
            if (use_bland) {
                enter = j;
                break;
            }
            if (enter < 0 || d < best) {
                best = d;
                enter = j;
            }
        }
        if (enter < 0) return PhaseResult::optimal;

        std::vector<Rat> w = t.multiply_binv(enter);
        int leave = -1;
        Rat best_ratio;
        for (int i = 0; i < t.m; ++i) {
            if (w[i].sign() <= 0) continue;
            Rat ratio = t.xb[i] / w[i];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
                best_ratio = ratio;
                leave = i;
            }
        }
        if (leave < 0) {
            unbounded_col = enter;
            unbounded_dir = std::move(w);
            return PhaseResult::unbounded;
        }
        t.pivot(enter, w, leave);
    }
}

}  // namespace

LpSolution lp_solve(const LinearProgram& prog, const LpOptions& opt) {
    prog.validate();
    const int n = prog.num_vars();
    const int m = static_cast<int>(prog.rows.size());

    // Internal minimization copy.
    std::vector<Rat> cost(n);
    for (int j = 0; j < n; ++j)
        cost[j] = prog.maximize ? -prog.costs[j] : prog.costs[j];

    // Normalize rhs >= 0, remembering flips for dual signs.
    std::vector<int> flip(m, 1);
    std::vector<Sense> sense(m);
    std::vector<Rat> rhs(m);
    for (int i = 0; i < m; ++i) {
        sense[i] = prog.rows[i].sense;
        rhs[i] = prog.rows[i].rhs;
        if (rhs[i].sign() < 0) {
            flip[i] = -1;
            rhs[i] = -rhs[i];
            if (sense[i] == Sense::le) sense[i] = Sense::ge;
            else if (sense[i] == Sense::ge) sense[i] = Sense::le;
        }
    }

    Tableau t;
    t.m = m;
    t.cols.resize(n);
    for (int i = 0; i < m; ++i)
        for (const auto& [j, v] : prog.rows[i].terms)
            if (!v.is_zero()) t.cols[j].emplace_back(i, Rat(flip[i]) * v);

    std::vector<Rat> c1;           // phase-1 costs
    std::vector<int> slack_of(m, -1);
    c1.assign(n, Rat(0));
    for (int i = 0; i < m; ++i) {
        if (sense[i] == Sense::eq) continue;
        int j = static_cast<int>(t.cols.size());
        t.cols.push_back({{i, Rat(sense[i] == Sense::le ? 1 : -1)}});
        c1.push_back(Rat(0));
        cost.push_back(Rat(0));
        slack_of[i] = j;
    }
    t.n_real = static_cast<int>(t.cols.size());
    std::vector<int> artificial_of(m, -1);
    t.basis.assign(m, -1);
    for (int i = 0; i < m; ++i) {
        if (sense[i] == Sense::le) {
            t.basis[i] = slack_of[i];
            continue;
        }
        int j = static_cast<int>(t.cols.size());
        t.cols.push_back({{i, Rat(1)}});
        c1.push_back(Rat(1));
        cost.push_back(Rat(0));
        artificial_of[i] = j;
        t.basis[i] = j;
    }
    t.n_total = static_cast<int>(t.cols.size());
    t.b = rhs;
    t.xb = rhs;
    t.binv.assign(m, std::vector<Rat>(m));
    for (int i = 0; i < m; ++i) t.binv[i][i] = Rat(1);

    LpSolution out;

    // Phase 1 (skipped when every row starts on its slack).
    bool need_phase1 = false;
    for (int i = 0; i < m; ++i)
        if (artificial_of[i] >= 0) need_phase1 = true;
    if (need_phase1) {
        std::vector<bool> allowed(t.n_total, true);
        int ucol = -1;
        std::vector<Rat> udir;
        run_simplex(t, c1, allowed, opt, ucol, udir);  // cannot be unbounded
        Rat p1;
        for (int i = 0; i < m; ++i)
            if (!c1[t.basis[i]].is_zero()) p1 += c1[t.basis[i]] * t.xb[i];
        if (p1.sign() > 0) {
            out.status = LpStatus::infeasible;
            std::vector<Rat> y = t.dual_y(c1);
            out.duals.resize(m);
            for (int i = 0; i < m; ++i) out.duals[i] = Rat(flip[i]) * y[i];
            out.pivots = t.pivots;
            return out;
        }
        // Degenerate artificials still in the basis: pivot them out when
        // possible (any nonzero element works, the pivot is degenerate). A
        // row whose binv.A is all zero is redundant and its artificial stays
        // pinned at zero for the rest of the solve.
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] < t.n_real) continue;
            for (int j = 0; j < t.n_real; ++j) {
                bool basic = false;
                for (int r = 0; r < m; ++r)
                    if (t.basis[r] == j) basic = true;
                if (basic) continue;
                std::vector<Rat> w = t.multiply_binv(j);
                if (w[i].is_zero()) continue;
                t.pivot(j, w, i);
                break;
            }
        }
    }

    // Phase 2: artificials can never re-enter.
    std::vector<bool> allowed(t.n_total, false);
    for (int j = 0; j < t.n_real; ++j) allowed[j] = true;
    int ucol = -1;
    std::vector<Rat> udir;
    PhaseResult res = run_simplex(t, cost, allowed, opt, ucol, udir);
    out.pivots = t.pivots;

    if (res == PhaseResult::unbounded) {
        out.status = LpStatus::unbounded;
        out.primal.assign(n, Rat(0));
        if (ucol < n) out.primal[ucol] = Rat(1);
        for (int i = 0; i < m; ++i)
            if (t.basis[i] < n) out.primal[t.basis[i]] = -udir[i];
        return out;
    }

    out.status = LpStatus::optimal;
    out.primal.assign(n, Rat(0));
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < n) out.primal[t.basis[i]] = t.xb[i];
    std::vector<Rat> y = t.dual_y(cost);
    out.duals.resize(m);
    for (int i = 0; i < m; ++i) {
        Rat d = Rat(flip[i]) * y[i];
        out.duals[i] = prog.maximize ? -d : d;
    }
    Rat obj;
    for (int j = 0; j < n; ++j)
        if (!out.primal[j].is_zero()) obj += prog.costs[j] * out.primal[j];
    out.objective = obj;
    // Strong duality holds exactly or the solve is wrong; check every time.
    Rat dual_obj;
    for (int i = 0; i < m; ++i)
        if (!out.duals[i].is_zero()) dual_obj += out.duals[i] * prog.rows[i].rhs;
    if (dual_obj != obj) throw InternalError("lp_solve: nonzero duality gap");
    return out;
}

LinearProgram dual_of(const LinearProgram& p) {
    p.validate();
    if (p.maximize) throw BadInput("dual_of: expected a minimization program");
    for (const auto& r : p.rows)
        if (r.sense != Sense::ge)
            throw BadInput("dual_of: expected covering form (all rows >=)");
    LinearProgram d;
    d.maximize = true;
    const int m = static_cast<int>(p.rows.size());
    d.costs.resize(m);
    for (int i = 0; i < m; ++i) d.costs[i] = p.rows[i].rhs;
    d.var_names.resize(m);
    for (int i = 0; i < m; ++i)
        d.var_names[i] = p.rows[i].name.empty() ? "y" + std::to_string(i)
                                                : "w_" + p.rows[i].name;
    std::vector<LpRow> cols(p.num_vars());
    for (int i = 0; i < m; ++i)
        for (const auto& [j, v] : p.rows[i].terms) cols[j].terms.emplace_back(i, v);
    for (int j = 0; j < p.num_vars(); ++j) {
        cols[j].sense = Sense::le;
        cols[j].rhs = p.costs[j];
        cols[j].name = p.var_name(j);
        d.rows.push_back(std::move(cols[j]));
    }
    return d;
}

std::string lp_to_text(const LinearProgram& p) {
    p.validate();
    std::ostringstream os;
    os << (p.maximize ? "max:" : "min:");
    for (int j = 0; j < p.num_vars(); ++j)
        if (!p.costs[j].is_zero()) os << " " << p.costs[j].str() << " " << p.var_name(j);
    os << "\n";
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        const auto& r = p.rows[i];
        os << (r.name.empty() ? "r" + std::to_string(i) : r.name) << ":";
        for (const auto& [j, v] : r.terms)
            os << " " << v.str() << " " << p.var_name(j);
        os << " " << (r.sense == Sense::le ? "<=" : r.sense == Sense::ge ? ">=" : "=")
           << " " << r.rhs.str() << "\n";
    }
    return os.str();
}

}  // namespace covergrid
