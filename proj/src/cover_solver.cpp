#include "covergrid/cover_solver.hpp"

#include <algorithm>
#include <map>

#include "covergrid/constructions.hpp"
#include "covergrid/errors.hpp"

namespace covergrid {

Rat Weighting::objective() const {
    Rat s;
    for (const auto& [p, w] : weights) s += w;
    return s;
}

CoverProblem build_cover_problem(const Grid& g, long k, std::optional<Index> missing,
                                 const CandidateOptions& copt) {
    if (k < 1) throw BadInput("build_cover_problem: k must be >= 1");
    if (missing && !g.contains(*missing))
        throw BadInput("build_cover_problem: missing point not in grid");
    CoverProblem cp;
    cp.k = k;
    cp.missing = missing;
    cp.candidates = enumerate_candidates(g, missing, copt);

    const int P = static_cast<int>(g.size());
    std::vector<int> row_of(P, -1);
    int mpos = missing ? g.point_pos(*missing) : -1;
    for (int t = 0; t < P; ++t) {
        if (t == mpos) continue;
        row_of[t] = static_cast<int>(cp.row_point.size());
        cp.row_point.push_back(t);
    }

    LinearProgram& lp = cp.lp;
    lp.costs.assign(cp.candidates.size(), Rat(1));
    lp.rows.resize(cp.row_point.size());
    for (std::size_t r = 0; r < cp.row_point.size(); ++r) {
        lp.rows[r].sense = Sense::ge;
        lp.rows[r].rhs = Rat(k);
        const Index& pt = g.points()[cp.row_point[r]];
        lp.rows[r].name = "p" + std::to_string(pt[0]) + "_" + std::to_string(pt[1]) +
                          (g.dim() == 3 ? "_" + std::to_string(pt[2]) : "");
    }
    for (std::size_t c = 0; c < cp.candidates.size(); ++c)
        for (int t : cp.candidates[c].members) {
            if (row_of[t] < 0) continue;
            lp.rows[row_of[t]].terms.emplace_back(static_cast<int>(c), Rat(1));
        }
    // terms were appended column-major per row in increasing c, already sorted
    return cp;
}

namespace {

// Maps a construction cover onto candidate columns by incidence member set.
std::optional<std::vector<Rat>> incumbent_assignment(const Grid& g,
                                                     const CoverProblem& cp,
                                                     const Cover& cover) {
    std::map<std::vector<int>, int> by_members;
    for (std::size_t c = 0; c < cp.candidates.size(); ++c)
        by_members.emplace(cp.candidates[c].members, static_cast<int>(c));
    const int mpos = cp.missing ? g.point_pos(*cp.missing) : -1;
    std::vector<Rat> x(cp.candidates.size(), Rat(0));
    for (const auto& e : cover.entries) {
        std::vector<int> mem;
        if (e.plane) {
            for (int t = 0; t < static_cast<int>(g.size()); ++t) {
                if (t == mpos) {
                    if (e.plane->incident(g, g.points()[t])) return std::nullopt;
                    continue;
                }
                if (e.plane->incident(g, g.points()[t])) mem.push_back(t);
            }
        } else {
            int pos = g.point_pos(*e.singleton_point);
            if (pos < 0 || pos == mpos) return std::nullopt;
            mem.push_back(pos);
        }
        if (mem.empty()) continue;  // useless entry, drop from the seed
        auto it = by_members.find(mem);
        if (it == by_members.end()) return std::nullopt;
        x[it->second] += Rat(e.mult);
    }
    return x;
}

}  // namespace

CovResult cov(const Grid& g, long k, std::optional<Index> missing,
              const CovOptions& opt) {
    CoverProblem cp = build_cover_problem(g, k, missing, opt.candidates);
    IlpOptions iopt;
    iopt.node_budget = opt.node_budget;
    iopt.lp = opt.lp;
    if (opt.seed_incumbent && !opt.candidates.paper_literal) {
        if (auto seed = construction_incumbent(g, k, missing)) {
            if (auto x = incumbent_assignment(g, cp, *seed)) iopt.incumbent = std::move(*x);
        }
    }
    IlpSolution sol = ilp_solve(cp.lp, iopt);
    CovResult out;
    out.stats.nodes = sol.nodes;
    out.stats.lp_pivots = sol.lp_pivots;
    out.stats.lp_solves = sol.lp_solves;
    out.stats.candidates = cp.candidates.size();
    out.stats.root_lp = sol.root_lp;
    out.stats.root_lp_known = sol.root_lp_known;
    if (sol.status == IlpStatus::budget_exceeded)
        throw ResourceLimit("cov: node budget exceeded; best bound " +
                            sol.best_bound.str() +
                            (sol.assignment.empty() ? "" : ", incumbent " +
                             sol.objective.str()));
    if (sol.status == IlpStatus::infeasible)
        throw InternalError("cov: covering program infeasible under the chosen column set");
    if (!sol.objective.is_integer())
        throw InternalError("cov: non-integer optimum");
    out.value = sol.objective.num().get_si();
    for (std::size_t c = 0; c < cp.candidates.size(); ++c) {
        if (sol.assignment[c].is_zero()) continue;
        long mult = sol.assignment[c].num().get_si();
        Hyperplane h = realize_candidate(g, cp.candidates[c], missing);
        out.cover.entries.push_back(CoverEntry{std::move(h), std::nullopt, mult});
    }
    return out;
}

CovLpResult cov_lp(const Grid& g, long k, std::optional<Index> missing,
                   const CovOptions& opt) {
    CoverProblem cp = build_cover_problem(g, k, missing, opt.candidates);
    LpSolution sol = lp_solve(cp.lp, opt.lp);
    if (sol.status != LpStatus::optimal)
        throw InternalError("cov_lp: covering relaxation infeasible under the chosen column set");
    CovLpResult out;
    out.value = sol.objective;
    out.stats.lp_pivots = sol.pivots;
    out.stats.lp_solves = 1;
    out.stats.candidates = cp.candidates.size();
    out.stats.root_lp = sol.objective;
    out.stats.root_lp_known = true;
    out.weighting.missing = missing;
    for (std::size_t r = 0; r < cp.row_point.size(); ++r) {
        if (sol.duals[r].sign() < 0)
            throw InternalError("cov_lp: negative covering dual");
        if (sol.duals[r].is_zero()) continue;
        // rescale duals as w = k * y so hyperplane sums stay <= k
        out.weighting.weights.emplace_back(g.points()[cp.row_point[r]],
                                           Rat(k) * sol.duals[r]);
    }
    return out;
}

namespace {

bool line3_through_point(const std::vector<Rat>& a, const std::vector<Rat>& d,
                         const std::vector<Rat>& q) {
    // q on {a + t d}?
    Rat c0 = (q[1] - a[1]) * d[2] - (q[2] - a[2]) * d[1];
    Rat c1 = (q[2] - a[2]) * d[0] - (q[0] - a[0]) * d[2];
    Rat c2 = (q[0] - a[0]) * d[1] - (q[1] - a[1]) * d[0];
    return c0.is_zero() && c1.is_zero() && c2.is_zero();
}

}  // namespace

WeightingReport check_weighting(const Grid& g, const Weighting& wt, long k,
                                bool stop_at_first) {
    WeightingReport rep;
    std::optional<std::vector<Rat>> missing_coords;
    if (wt.missing) {
        if (!g.contains(*wt.missing))
            throw BadInput("check_weighting: missing point not in grid");
        missing_coords = g.coords(*wt.missing);
    }

    std::vector<Index> support;
    std::vector<std::vector<Rat>> sc;
    std::vector<Rat> w;
    for (const auto& [p, v] : wt.weights) {
        if (v.sign() < 0) throw BadInput("check_weighting: negative weight");
        if (!g.contains(p)) throw BadInput("check_weighting: weight on non-grid point");
        if (wt.missing && p == *wt.missing && v.sign() > 0)
            throw BadInput("check_weighting: positive weight on the missing point");
        if (v.is_zero()) continue;
        support.push_back(p);
        sc.push_back(g.coords(p));
        w.push_back(v);
        rep.objective += v;
    }
    const int S = static_cast<int>(support.size());
    rep.ok = true;
    auto add_violation = [&](const char* kind, std::vector<int> mem, Rat sum) {
        rep.ok = false;
        WeightingViolation v;
        v.kind = kind;
        for (int t : mem) v.members.push_back(support[t]);
        v.weight_sum = std::move(sum);
        rep.violations.push_back(std::move(v));
    };

    for (int i = 0; i < S; ++i) {
        if (w[i] > Rat(k)) {
            add_violation("singleton", {i}, w[i]);
            if (stop_at_first) return rep;
        }
    }

    if (g.dim() == 2) {
        std::map<Hyperplane, bool> seen;
        for (int i = 0; i < S && (rep.ok || !stop_at_first); ++i) {
            for (int j = i + 1; j < S; ++j) {
                Hyperplane h = Hyperplane::line_through(sc[i], sc[j]);
                if (missing_coords && h.incident(*missing_coords)) continue;
                if (!seen.emplace(h, true).second) continue;
                Rat sum;
                std::vector<int> mem;
                for (int t = 0; t < S; ++t)
                    if (h.incident(sc[t])) {
                        sum += w[t];
                        mem.push_back(t);
                    }
                if (sum > Rat(k)) {
                    add_violation("line", mem, sum);
                    if (stop_at_first) return rep;
                }
            }
        }
        return rep;
    }

    // 3D: maximal collinear support sets (realizable by a plane through the
    // line when the line misses the missing point), then spanned planes.
    std::map<std::vector<int>, bool> seen_lines;
    for (int i = 0; i < S; ++i) {
        for (int j = i + 1; j < S; ++j) {
            std::vector<Rat> d(3);
            for (int t = 0; t < 3; ++t) d[t] = sc[j][t] - sc[i][t];
            std::vector<int> mem;
            Rat sum;
            for (int t = 0; t < S; ++t)
                if (t == i || t == j || line3_through_point(sc[i], d, sc[t])) {
                    mem.push_back(t);
                    sum += w[t];
                }
            if (!seen_lines.emplace(mem, true).second) continue;
            if (missing_coords && line3_through_point(sc[i], d, *missing_coords)) continue;
            if (sum > Rat(k)) {
                add_violation("line", mem, sum);
                if (stop_at_first) return rep;
            }
        }
    }
    std::map<Hyperplane, bool> seen_planes;
    for (int i = 0; i < S; ++i) {
        for (int j = i + 1; j < S; ++j) {
            for (int r = j + 1; r < S; ++r) {
                auto h = Hyperplane::plane_through(sc[i], sc[j], sc[r]);
                if (!h) continue;
                if (missing_coords && h->incident(*missing_coords)) continue;
                if (!seen_planes.emplace(*h, true).second) continue;
                Rat sum;
                std::vector<int> mem;
                for (int t = 0; t < S; ++t)
                    if (h->incident(sc[t])) {
                        sum += w[t];
                        mem.push_back(t);
                    }
                if (sum > Rat(k)) {
                    add_violation("plane", mem, sum);
                    if (stop_at_first) return rep;
                }
            }
        }
    }
    return rep;
}

}  // namespace covergrid
