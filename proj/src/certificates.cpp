#include "covergrid/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "covergrid/constructions.hpp"
#include "covergrid/errors.hpp"

namespace covergrid {

Rat lemma_bound(const std::vector<long>& betas, long k, long l0, int t) {
    const int n = static_cast<int>(betas.size());
    if (n == 0) throw BadInput("lemma_bound: empty profile");
    if (k < 1) throw BadInput("lemma_bound: k must be >= 1");
    if (l0 < 0) throw BadInput("lemma_bound: l0 must be >= 0");
    if (t < 1 || t > n) throw BadInput("lemma_bound: t out of range");
    for (int i = 0; i < n; ++i) {
        if (betas[i] < 1) throw BadInput("lemma_bound: betas must be positive");
        if (i && betas[i] < betas[i - 1])
            throw BadInput("lemma_bound: betas must be nondecreasing");
    }
    if (Rat(betas[t - 1]) < Rat(l0, k))
        throw BadInput("lemma_bound: requires beta_t >= l0/k");
    Rat inv_sum;
    for (int i = t - 1; i < n; ++i) inv_sum += Rat(1, betas[i]);
    return Rat(static_cast<long>(n - t + 1) * k) + Rat(l0) * (Rat(1) - inv_sum);
}

Rat lemma_opt_bound(const std::vector<long>& betas, long k) {
    if (betas.empty()) throw BadInput("lemma_opt_bound: empty profile");
    if (k < 1) throw BadInput("lemma_opt_bound: k must be >= 1");
    long maxb = 0;
    for (long b : betas) {
        if (b < 1) throw BadInput("lemma_opt_bound: betas must be positive");
        maxb = std::max(maxb, b);
    }
    std::optional<Rat> best;
    for (long l0 = 0; l0 <= k * maxb; ++l0) {
        Rat total(l0);
        for (long b : betas) {
            mpz_class need = (Rat(k) - Rat(l0, b)).ceil();
            if (need > 0) total += Rat(need);
        }
        if (!best || total < *best) best = total;
    }
    return *best;
}

double conical_closed_form(long n, long k) {
    if (n < 2) throw BadInput("conical_closed_form: n must be >= 2");
    if (k < 1) throw BadInput("conical_closed_form: k must be >= 1");
    double nd = static_cast<double>(n);
    return nd * static_cast<double>(k) *
           (1.0 - std::exp(1.0 / (2.0 * nd) - 1.0) - 1.0 / nd);
}

std::vector<long> halfgrid_profile(long m, long n) {
    if (m < 2) throw BadInput("halfgrid_profile: m must be >= 2");
    if (m > n) throw BadInput("halfgrid_profile: need m <= n");
    std::vector<long> beta;
    for (long i = 1; i <= m; ++i) beta.push_back(1 + (i - 1) * (n - 1) / (m - 1));
    return beta;
}

double halfgrid_closed_form(long m, long n, long k) {
    if (m < 2) throw BadInput("halfgrid_closed_form: m must be >= 2");
    if (m > n) throw BadInput("halfgrid_closed_form: need m <= n");
    if (k < 1) throw BadInput("halfgrid_closed_form: k must be >= 1");
    return static_cast<double>(m) * static_cast<double>(k) *
           (1.0 - std::exp(-static_cast<double>(n) / static_cast<double>(m)));
}

std::vector<long> row_profile(const Grid& g) {
    if (g.dim() != 2) throw BadInput("row_profile: 2D grids only");
    std::map<int, long> rows;
    for (const Index& p : g.points()) rows[p[1]] += 1;
    std::vector<long> beta;
    for (const auto& [r, c] : rows) beta.push_back(c);
    std::sort(beta.begin(), beta.end());
    return beta;
}

Weighting weighting_generic2(const Grid& g, long k) {
    if (g.kind() != GridKind::generic2)
        throw BadInput("weighting_generic2: wrong grid kind");
    const int n = g.order();
    if (n < 4) throw BadInput("weighting_generic2: order must be >= 4");
    if (k < 1) throw BadInput("weighting_generic2: k must be >= 1");
    Weighting wt;
    wt.missing = Index{0, 0, 0};
    const Rat half_k(k, 2);
    for (int i = 1; i <= n - 1; ++i) {
        wt.weights.emplace_back(Index{i, 0, 0}, half_k);
        wt.weights.emplace_back(Index{0, i, 0}, half_k);
    }
    for (int i = 1; i <= n - 2; ++i)
        wt.weights.emplace_back(Index{i, n - 1 - i, 0}, half_k);
    std::sort(wt.weights.begin(), wt.weights.end());
    return wt;
}

Weighting weighting_generic3(const Grid& g, long k, bool literal_faces) {
    if (g.kind() != GridKind::generic3)
        throw BadInput("weighting_generic3: wrong grid kind");
    const int n = g.order();
    if (n < 3) throw BadInput("weighting_generic3: order must be >= 3");
    if (k < 1) throw BadInput("weighting_generic3: k must be >= 1");
    Weighting wt;
    wt.missing = Index{0, 0, 0};
    for (const Index& p : g.points()) {
        const long r = p[0], s = p[1], t = p[2];
        const int nonzero = (r > 0) + (s > 0) + (t > 0);
        if (nonzero == 0) continue;
        if (nonzero == 1) {
            wt.weights.emplace_back(p, Rat(k, 3));
        } else if (nonzero == 2) {
            if (literal_faces || r + s + t == n) wt.weights.emplace_back(p, Rat(k, 6));
        } else if (r + s + t == n && 3 * std::max({r, s, t}) <= 2 * n) {
            // |r - n/3| + |s - n/3| + |t - n/3| = (|3r-n| + |3s-n| + |3t-n|)/3
            long num = std::abs(3 * r - n) + std::abs(3 * s - n) + std::abs(3 * t - n);
            if (num > 0)
                wt.weights.emplace_back(p, Rat(k * num, 3L * n * n));
        }
    }
    return wt;
}

std::vector<BoundResult> bound_report(const Grid& g, long k,
                                      const BoundReportOptions& opt) {
    std::vector<BoundResult> out;
    auto exact_row = [&](std::string method, Rat v, std::string note) {
        BoundResult r;
        r.method = std::move(method);
        r.exact = true;
        r.exact_value = std::move(v);
        r.approx = r.exact_value.to_double();
        r.params = "n=" + std::to_string(g.order()) + " k=" + std::to_string(k);
        r.note = std::move(note);
        out.push_back(std::move(r));
    };
    auto float_row = [&](std::string method, double v, std::string note) {
        BoundResult r;
        r.method = std::move(method);
        r.exact = false;
        r.approx = v;
        r.params = "n=" + std::to_string(g.order()) + " k=" + std::to_string(k);
        r.note = std::move(note);
        out.push_back(std::move(r));
    };

    if (g.dim() == 2)
        exact_row("lemma_opt_bound", lemma_opt_bound(row_profile(g), k),
                  "lower bound, plain k-cover");
    switch (g.kind()) {
        case GridKind::conical:
            if (g.order() >= 2)
                float_row("conical_closed_form", conical_closed_form(g.order(), k),
                          "float, asymptotic; plain k-cover");
            break;
        case GridKind::halfgrid:
        case GridKind::halfrect:
            float_row("halfgrid_closed_form",
                      halfgrid_closed_form(*g.m(), g.order(), k),
                      "float, leading term only; plain k-cover");
            break;
        case GridKind::simplex:
        case GridKind::generic2:
            float_row("halfgrid_closed_form",
                      halfgrid_closed_form(g.order(), g.order(), k),
                      "float, leading term only; plain k-cover");
            break;
        default:
            break;
    }
    if (g.kind() == GridKind::generic2 && g.order() >= 4)
        exact_row("weighting_generic2", weighting_generic2(g, k).objective(),
                  "dual certificate, missing=vertex");
    if (g.kind() == GridKind::generic3 && g.order() >= 3)
        exact_row("weighting_generic3", weighting_generic3(g, k).objective(),
                  "dual certificate, missing=origin");

    std::optional<Index> default_missing;
    if (g.kind() == GridKind::simplex || g.kind() == GridKind::generic2 ||
        g.kind() == GridKind::generic3)
        default_missing = g.vertex();
    if (opt.include_lp && g.size() <= opt.lp_max_points) {
        CovLpResult lp = cov_lp(g, k, default_missing);
        exact_row("cov_lp", lp.value,
                  default_missing ? "LP relaxation, missing=vertex"
                                  : "LP relaxation, plain k-cover");
    }
    if (opt.ilp_value)
        exact_row("cov", Rat(*opt.ilp_value),
                  default_missing ? "exact ILP, missing=vertex"
                                  : "exact ILP, plain k-cover");

    // upper bounds from the matching construction
    if (auto c = construction_incumbent(g, k, default_missing))
        exact_row("construction", Rat(c->total()),
                  default_missing ? "upper bound, missing=vertex"
                                  : "upper bound, plain k-cover");
    return out;
}

}  // namespace covergrid
