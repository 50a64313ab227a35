#include <doctest.h>

#include <cmath>

#include "covergrid/certificates.hpp"
#include "covergrid/cover_solver.hpp"
#include "covergrid/errors.hpp"
#include "covergrid/grid.hpp"

using namespace covergrid;

TEST_CASE("lemma_bound evaluates the displayed expression") {
    CHECK(lemma_bound({1, 2, 3}, 1, 2, 2) == Rat(7, 3));
    CHECK(lemma_bound({2, 5, 9}, 2, 0, 1) == Rat(6));  // l0 = 0: nk
    // all-ones profile telescopes to k
    CHECK(lemma_bound({1, 1, 1, 1}, 3, 3, 1) == Rat(3));
    CHECK_THROWS_AS(lemma_bound({1, 2, 3}, 1, 5, 1), BadInput);  // beta_t < l0/k
    CHECK_THROWS_AS(lemma_bound({3, 2, 1}, 1, 0, 1), BadInput);  // not nondecreasing
}

TEST_CASE("lemma_opt_bound small cases") {
    CHECK(lemma_opt_bound({1, 2, 3}, 1) == Rat(3));
    CHECK(lemma_opt_bound({1}, 5) == Rat(5));
    CHECK(lemma_opt_bound({1}, 1) == Rat(1));
}

TEST_CASE("strengthened per-l0 bound dominates the lemma at the same l0") {
    std::vector<long> betas{1, 2, 2, 4};
    for (long k : {1L, 2L}) {
        std::optional<Rat> min_inner;
        for (long l0 = 0; l0 <= 4 * k; ++l0) {
            Rat inner(l0);
            for (long b : betas) {
                mpz_class need = (Rat(k) - Rat(l0, b)).ceil();
                if (need > 0) inner += Rat(need);
            }
            if (!min_inner || inner < *min_inner) min_inner = inner;
            for (int t = 1; t <= 4; ++t) {
                if (Rat(betas[t - 1]) < Rat(l0, k)) continue;
                CHECK(inner >= lemma_bound(betas, k, l0, t));
            }
        }
        // the optimized bound is exactly the minimum over l0
        CHECK(lemma_opt_bound(betas, k) == *min_inner);
    }
}

TEST_CASE("lemma_opt_bound is a valid lower bound on cov") {
    for (std::uint64_t seed : {3u, 4u}) {
        Grid g = make_conical(4, seed);
        for (long k : {1L, 2L}) {
            Rat bound = lemma_opt_bound(row_profile(g), k);
            CovResult r = cov(g, k, std::nullopt);
            CHECK(bound <= Rat(r.value));
        }
    }
}

TEST_CASE("conical closed form values") {
    double v = conical_closed_form(10, 1);
    CHECK(v == doctest::Approx(5.1325897654550).epsilon(1e-9));
    // linear in k up to float rounding
    CHECK(conical_closed_form(10, 2) == doctest::Approx(2 * v).epsilon(1e-12));
    // long-n limit approaches 1 - 1/e at rate O(1/n)
    double target = 1.0 - std::exp(-1.0);
    for (long n : {1000L, 10000L, 1000000L}) {
        double diff = std::fabs(conical_closed_form(n, 1) / static_cast<double>(n) - target);
        CHECK(static_cast<double>(n) * diff < 1.5);
    }
    CHECK(std::fabs(conical_closed_form(1000000, 1) / 1e6 - target) < 1e-3);
    CHECK_THROWS_AS(conical_closed_form(1, 1), BadInput);
}

TEST_CASE("closed forms match a higher-precision reference") {
    for (long n : {5L, 10L, 100L, 1000L}) {
        long double nd = static_cast<long double>(n);
        long double ref =
            nd * (1.0L - std::exp(1.0L / (2.0L * nd) - 1.0L) - 1.0L / nd);
        CHECK(std::fabs(conical_closed_form(n, 1) - static_cast<double>(ref)) < 1e-9);
    }
    for (long m : {2L, 5L, 9L}) {
        long double ref = static_cast<long double>(m) *
                          (1.0L - std::exp(-18.0L / static_cast<long double>(m)));
        CHECK(std::fabs(halfgrid_closed_form(m, 18, 1) - static_cast<double>(ref)) < 1e-9);
    }
}

TEST_CASE("halfgrid_profile") {
    CHECK(halfgrid_profile(3, 3) == std::vector<long>{1, 2, 3});
    CHECK(halfgrid_profile(2, 5) == std::vector<long>{1, 5});
    // profile total matches the equispaced half-grid size
    for (int m = 2; m <= 5; ++m) {
        for (int n = m; n <= 6; ++n) {
            std::vector<Rat> s1, s2;
            for (int i = 0; i < n; ++i) s1.emplace_back(i);
            for (int j = 0; j < m; ++j) s2.emplace_back(j);
            Grid g = make_halfgrid(s1, s2);
            long total = 0;
            for (long b : halfgrid_profile(m, n)) total += b;
            CHECK(total == static_cast<long>(g.size()));
            CHECK(row_profile(g) == halfgrid_profile(m, n));
        }
    }
    CHECK_THROWS_AS(halfgrid_profile(1, 5), BadInput);
}

TEST_CASE("halfgrid closed form") {
    double mn = halfgrid_closed_form(7, 7, 3);
    CHECK(mn == doctest::Approx(7 * 3 * (1 - std::exp(-1.0))));
    CHECK(halfgrid_closed_form(2, 20, 1) == doctest::Approx(2 * (1 - std::exp(-10.0))));
    CHECK(halfgrid_closed_form(3, 9, 1) < halfgrid_closed_form(3, 12, 1));
}

TEST_CASE("weighting_generic2 objective identity") {
    for (int n = 4; n <= 7; ++n) {
        for (long k : {1L, 2L, 3L}) {
            Grid g = make_generic2(n, 6);
            Weighting wt = weighting_generic2(g, k);
            CHECK(wt.objective() == Rat(3L * n * k, 2) - Rat(2 * k));
        }
    }
    Grid g4 = make_generic2(4, 6);
    CHECK(weighting_generic2(g4, 2).objective() == Rat(8));
    Grid g5 = make_generic2(5, 6);
    CHECK(weighting_generic2(g5, 1).objective() == Rat(11, 2));
}

TEST_CASE("weighting_generic2 passes the feasibility scan") {
    Grid g = make_generic2(6, 3);
    Weighting wt = weighting_generic2(g, 2);
    WeightingReport wr = check_weighting(g, wt, 2);
    CHECK(wr.ok);
}

TEST_CASE("weighting_generic3 axis part and small feasibility") {
    Grid g = make_generic3(3, 5);
    Weighting wt = weighting_generic3(g, 3);
    Rat axis_part;
    for (const auto& [p, w] : wt.weights) {
        int nz = (p[0] > 0) + (p[1] > 0) + (p[2] > 0);
        if (nz == 1) axis_part += w;
    }
    CHECK(axis_part == Rat(3 * 3));  // 3n points of weight k/3 each
    WeightingReport wr = check_weighting(g, wt, 3);
    CHECK(wr.ok);
}

TEST_CASE("literal face weighting is infeasible") {
    Grid g = make_generic3(6, 5);
    Weighting lit = weighting_generic3(g, 6, /*literal_faces=*/true);
    WeightingReport wr = check_weighting(g, lit, 6, /*stop_at_first=*/true);
    CHECK_FALSE(wr.ok);
    REQUIRE(!wr.violations.empty());
    CHECK(wr.violations[0].weight_sum > Rat(6));
}

TEST_CASE("interior face density approaches its planar limit") {
    // interior sum depends only on indices; its density in nk increases with
    // n toward 4/27
    auto density = [](long n) {
        Rat sum;
        for (long r = 1; r < n; ++r)
            for (long s = 1; r + s < n; ++s) {
                long t = n - r - s;
                if (t < 1 || 3 * std::max({r, s, t}) > 2 * n) continue;
                sum += Rat(std::abs(3 * r - n) + std::abs(3 * s - n) +
                               std::abs(3 * t - n),
                           3L * n * n);
            }
        return sum / Rat(n);  // interior/(nk) with k scaling cancelled
    };
    Rat limit(4, 27);
    Rat prev(0);
    for (long n : {6L, 9L, 12L, 24L, 36L}) {
        Rat d = density(n);
        CHECK(d > prev);
        CHECK(d <= limit);
        CHECK(limit - d <= Rat(5, 100));
        prev = d;
    }
    CHECK((limit - density(36)) < Rat(1, 100));
}

TEST_CASE("bound_report tabulates applicable bounds") {
    Grid g = make_conical(4, 3);
    BoundReportOptions opt;
    CovResult r = cov(g, 1, std::nullopt);
    opt.ilp_value = r.value;
    auto rows = bound_report(g, 1, opt);
    bool has_lemma = false, has_closed = false, has_lp = false, has_cov = false,
         has_constr = false;
    Rat lp_value;
    for (const auto& b : rows) {
        if (b.method == "lemma_opt_bound") {
            has_lemma = true;
            CHECK(b.exact_value <= Rat(r.value));
        }
        if (b.method == "conical_closed_form") {
            has_closed = true;
            CHECK(b.approx <= static_cast<double>(r.value) + 1e-9);
        }
        if (b.method == "cov_lp") {
            has_lp = true;
            lp_value = b.exact_value;
            CHECK(b.exact_value <= Rat(r.value));
        }
        if (b.method == "cov") has_cov = true;
        if (b.method == "construction") {
            has_constr = true;
            CHECK(b.exact_value >= Rat(r.value));
            CHECK(b.exact_value == Rat(4));  // rows_cover: nk
        }
    }
    CHECK(has_lemma);
    CHECK(has_closed);
    CHECK(has_lp);
    CHECK(has_cov);
    CHECK(has_constr);
}

TEST_CASE("bound_report on generic2 exposes the certificate bound") {
    Grid g = make_generic2(5, 1);
    auto rows = bound_report(g, 1);
    bool found = false;
    for (const auto& b : rows)
        if (b.method == "weighting_generic2") {
            found = true;
            CHECK(b.exact_value == Rat(11, 2));
        }
    CHECK(found);
}
