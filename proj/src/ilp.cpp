#include "covergrid/ilp.hpp"

#include <algorithm>

#include "covergrid/errors.hpp"

namespace covergrid {

namespace {

struct Branch {
    int var;
    Sense sense;  // le (x <= v) or ge (x >= v)
    mpz_class value;
};

struct Node {
    std::vector<Branch> path;
    Rat parent_bound;
};

bool feasible_point(const LinearProgram& p, const std::vector<Rat>& x) {
    for (const auto& r : p.rows) {
        Rat lhs;
        for (const auto& [j, v] : r.terms) lhs += v * x[j];
        if (r.sense == Sense::ge && lhs < r.rhs) return false;
        if (r.sense == Sense::le && lhs > r.rhs) return false;
        if (r.sense == Sense::eq && lhs != r.rhs) return false;
    }
    for (const auto& v : x)
        if (v.sign() < 0) return false;
    return true;
}

}  // namespace

IlpSolution ilp_solve(const LinearProgram& p, const IlpOptions& opt) {
    p.validate();
    if (p.maximize) throw BadInput("ilp_solve: minimization programs only");
    const int n = p.num_vars();

    bool integer_costs = true;
    for (const auto& c : p.costs)
        if (!c.is_integer()) integer_costs = false;

    IlpSolution out;
    std::optional<Rat> best_obj;
    std::vector<Rat> best_x;
    if (opt.incumbent) {
        const auto& inc = *opt.incumbent;
        if (static_cast<int>(inc.size()) != n)
            throw BadInput("ilp_solve: incumbent size mismatch");
        for (const auto& v : inc)
            if (!v.is_integer()) throw BadInput("ilp_solve: incumbent not integral");
        if (!feasible_point(p, inc)) throw BadInput("ilp_solve: incumbent infeasible");
        Rat obj;
        for (int j = 0; j < n; ++j)
            if (!inc[j].is_zero()) obj += p.costs[j] * inc[j];
        best_obj = obj;
        best_x = inc;
    }

    // Node relaxations are the base program plus one row per branch.
    LinearProgram work = p;
    auto solve_node = [&](const Node& node) {
        work.rows.resize(p.rows.size());
        for (const auto& b : node.path) {
            LpRow r;
            r.terms = {{b.var, Rat(1)}};
            r.sense = b.sense;
            r.rhs = Rat(b.value);
            work.rows.push_back(std::move(r));
        }
        LpSolution s = lp_solve(work, opt.lp);
        out.lp_pivots += s.pivots;
        out.lp_solves += 1;
        return s;
    };

    std::vector<Node> stack;
    stack.push_back(Node{});
    bool root = true;
    bool budget_hit = false;
    std::optional<Rat> open_min;  // smallest parent bound among pruned-for-budget nodes

    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        if (out.nodes >= opt.node_budget) {
            budget_hit = true;
            if (!open_min || node.parent_bound < *open_min) open_min = node.parent_bound;
            continue;
        }
        // Bound-prune against the incumbent before paying for the LP.
        if (best_obj && !root && node.parent_bound >= *best_obj) continue;
        ++out.nodes;

        LpSolution rel = solve_node(node);
        if (rel.status == LpStatus::infeasible) {
            if (root) {
                out.status = IlpStatus::infeasible;
                return out;
            }
            continue;
        }
        if (rel.status == LpStatus::unbounded)
            throw InternalError("ilp_solve: unbounded relaxation");

        Rat bound = rel.objective;
        if (integer_costs && !bound.is_integer()) bound = Rat(bound.ceil());
        if (root) {
            out.root_lp = rel.objective;
            out.root_lp_known = true;
            root = false;
        }
        if (best_obj && bound >= *best_obj) continue;

        int frac_var = -1;
        Rat frac_score;  // |frac - 1/2|, smaller is more fractional
        for (int j = 0; j < n; ++j) {
            const Rat& v = rel.primal[j];
            if (v.is_integer()) continue;
            Rat f = v - Rat(v.floor());
            Rat score = (f - Rat(1, 2)).abs();
            if (frac_var < 0 || score < frac_score) {
                frac_score = score;
                frac_var = j;
            }
        }
        if (frac_var < 0) {
            // Integral relaxation: new incumbent (strict improvement only).
            if (!best_obj || rel.objective < *best_obj) {
                best_obj = rel.objective;
                best_x = rel.primal;
            }
            continue;
        }

        mpz_class fl = rel.primal[frac_var].floor();
        Node down = node;
        down.path.push_back(Branch{frac_var, Sense::le, fl});
        down.parent_bound = bound;
        Node up = node;
        up.path.push_back(Branch{frac_var, Sense::ge, fl + 1});
        up.parent_bound = bound;
        stack.push_back(std::move(down));
        stack.push_back(std::move(up));  // up pops first: dive toward coverage
    }

    if (budget_hit) {
        out.status = IlpStatus::budget_exceeded;
        if (best_obj) {
            out.objective = *best_obj;
            out.assignment = best_x;
        }
        out.best_bound = open_min ? *open_min : (best_obj ? *best_obj : Rat(0));
        return out;
    }
    if (!best_obj) {
        out.status = IlpStatus::infeasible;
        return out;
    }
    out.status = IlpStatus::optimal;
    out.objective = *best_obj;
    out.best_bound = *best_obj;
    out.assignment = std::move(best_x);
    return out;
}

}  // namespace covergrid
