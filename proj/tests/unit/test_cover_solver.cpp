#include <doctest.h>

#include <functional>

#include "covergrid/certificates.hpp"
#include "covergrid/constructions.hpp"
#include "covergrid/cover_solver.hpp"
#include "covergrid/errors.hpp"
#include "covergrid/grid.hpp"

using namespace covergrid;

TEST_CASE("cov on the 2x2 grid missing the corner") {
    Grid g = make_fullgrid({Rat(0), Rat(1)}, {Rat(0), Rat(1)});
    CovResult r = cov(g, 1, Index{0, 0, 0});
    CHECK(r.value == 2);
    CoverReport rep = verify_cover(g, r.cover, 1, Index{0, 0, 0});
    CHECK(rep.ok);
}

TEST_CASE("cov on the equispaced simplex grid") {
    Grid g = make_simplex(4);
    CovResult r = cov(g, 2, g.vertex());
    CHECK(r.value == 6);  // (n-1)k
    CHECK(verify_cover(g, r.cover, 2, g.vertex()).ok);
}

TEST_CASE("cov on the smallest half-rectangular grid") {
    Grid g = make_halfrect(2, 3);
    CovResult r = cov(g, 1, Index{0, 0, 0});
    CHECK(r.value == 2);
}

TEST_CASE("cov_lp relaxation and dual weighting") {
    Grid g = make_fullgrid({Rat(0), Rat(1)}, {Rat(0), Rat(1)});
    CovLpResult lp = cov_lp(g, 1, Index{0, 0, 0});
    CHECK(lp.value == Rat(3, 2));  // three pair-lines at 1/2 each
    WeightingReport wr = check_weighting(g, lp.weighting, 1);
    CHECK(wr.ok);
    CHECK(wr.objective == lp.value);

    CovResult ilp = cov(g, 1, Index{0, 0, 0});
    CHECK(lp.value <= Rat(ilp.value));
}

TEST_CASE("sandwich property on assorted instances") {
    struct Case {
        Grid g;
        long k;
        std::optional<Index> missing;
    };
    std::vector<Case> cases;
    cases.push_back({make_simplex(4), 2, make_simplex(4).vertex()});
    cases.push_back({make_halfrect(3, 5), 1, Index{1, 1, 0}});
    cases.push_back({make_conical(4, 3), 2, std::nullopt});
    for (auto& c : cases) {
        CovLpResult lp = cov_lp(c.g, c.k, c.missing);
        CovResult ilp = cov(c.g, c.k, c.missing);
        WeightingReport wr = check_weighting(c.g, lp.weighting, c.k);
        CHECK(wr.ok);
        CHECK(wr.objective <= lp.value);
        CHECK(lp.value <= Rat(ilp.value));
        if (auto built = construction_incumbent(c.g, c.k, c.missing))
            CHECK(ilp.value <= built->total());
    }
}

TEST_CASE("returned cover avoids the missing point") {
    Grid g = make_generic2(4, 8);
    CovResult r = cov(g, 1, g.vertex());
    for (const auto& e : r.cover.entries) {
        REQUIRE(e.plane.has_value());
        CHECK_FALSE(e.plane->incident(g, *g.vertex()));
    }
    CHECK(verify_cover(g, r.cover, 1, g.vertex()).ok);
}

TEST_CASE("check_weighting basics") {
    Grid g = make_fullgrid({Rat(0), Rat(1), Rat(2)}, {Rat(0), Rat(1), Rat(2)});
    Weighting zero;
    zero.missing = Index{0, 0, 0};
    WeightingReport wr = check_weighting(g, zero, 1);
    CHECK(wr.ok);
    CHECK(wr.objective == Rat(0));

    // weight k on two points joined by an admissible line: sum 2k flagged
    Weighting heavy;
    heavy.missing = Index{0, 0, 0};
    heavy.weights.emplace_back(Index{1, 0, 0}, Rat(2));
    heavy.weights.emplace_back(Index{1, 1, 0}, Rat(2));
    WeightingReport bad = check_weighting(g, heavy, 2);
    CHECK_FALSE(bad.ok);
    REQUIRE(!bad.violations.empty());
    CHECK(bad.violations[0].weight_sum == Rat(4));
}

TEST_CASE("check_weighting on the generic2 certificate") {
    Grid g = make_generic2(5, 2);
    Weighting wt = weighting_generic2(g, 2);
    WeightingReport wr = check_weighting(g, wt, 2);
    CHECK(wr.ok);
    CHECK(wr.objective == Rat(3 * 5 * 2, 2) - Rat(2 * 2));
}

TEST_CASE("weight on the missing point is rejected") {
    Grid g = make_fullgrid({Rat(0), Rat(1)}, {Rat(0), Rat(1)});
    Weighting w;
    w.missing = Index{0, 0, 0};
    w.weights.emplace_back(Index{0, 0, 0}, Rat(1));
    CHECK_THROWS_AS(check_weighting(g, w, 1), BadInput);
}

TEST_CASE("paper-literal columns reproduce the line-only program") {
    Grid g = make_fullgrid({Rat(0), Rat(1)}, {Rat(0), Rat(1)});
    CovOptions opt;
    opt.candidates.paper_literal = true;
    CovResult r = cov(g, 1, Index{0, 0, 0}, opt);
    CHECK(r.value == 2);
    CHECK(r.stats.candidates == 3);  // x=1, y=1, x+y=1 and nothing else
}

TEST_CASE("stats are populated") {
    Grid g = make_halfrect(2, 4);
    CovResult r = cov(g, 1, Index{0, 0, 0});
    CHECK(r.stats.candidates > 0);
    CHECK(r.stats.lp_solves >= 1);
    CHECK(r.stats.root_lp_known);
}

TEST_CASE("bad inputs") {
    Grid g = make_halfrect(2, 3);
    CHECK_THROWS_AS(cov(g, 0, std::nullopt), BadInput);
    CHECK_THROWS_AS(cov(g, 1, Index{7, 7, 0}), BadInput);
}

TEST_CASE("single-point grids") {
    Grid g = make_fullgrid({Rat(3)}, {Rat(4)});
    CovResult plain = cov(g, 2, std::nullopt);
    CHECK(plain.value == 2);  // the singleton line twice
    CHECK(verify_cover(g, plain.cover, 2, std::nullopt).ok);

    CovResult empty = cov(g, 1, Index{0, 0, 0});
    CHECK(empty.value == 0);  // nothing left to cover
    CHECK(empty.cover.entries.empty());
    CHECK(verify_cover(g, empty.cover, 1, Index{0, 0, 0}).ok);
}

TEST_CASE("incumbent seeding never changes the optimum") {
    struct Case {
        Grid g;
        long k;
        std::optional<Index> missing;
    };
    std::vector<Case> cases;
    cases.push_back({make_simplex(5), 2, make_simplex(5).vertex()});
    cases.push_back({make_generic2(5, 14), 1, make_generic2(5, 14).vertex()});
    cases.push_back({make_halfrect(4, 6), 1, Index{2, 1, 0}});
    cases.push_back({make_conical(5, 15), 2, std::nullopt});
    for (auto& c : cases) {
        CovOptions seeded;
        CovOptions cold;
        cold.seed_incumbent = false;
        CovResult a = cov(c.g, c.k, c.missing, seeded);
        CovResult b = cov(c.g, c.k, c.missing, cold);
        CHECK(a.value == b.value);
        CHECK(verify_cover(c.g, b.cover, c.k, c.missing).ok);
    }
}

namespace {

// test-only exhaustive search, independent of the LP/ILP path
long exhaustive_cov(const Grid& g, long k, std::optional<Index> missing) {
    auto cands = enumerate_candidates(g, missing, {});
    int mpos = missing ? g.point_pos(*missing) : -1;
    std::vector<long> deficit(g.size(), k);
    long total = 0;
    for (int t = 0; t < static_cast<int>(g.size()); ++t) {
        if (t == mpos) deficit[t] = 0;
        total += deficit[t];
    }
    std::size_t widest = 1;
    for (const auto& c : cands) widest = std::max(widest, c.members.size());
    long best = total;  // singleton-only cover
    std::function<void(long, long)> go = [&](long used, long left) {
        if (left == 0) {
            best = std::min(best, used);
            return;
        }
        if (used + (left + static_cast<long>(widest) - 1) / static_cast<long>(widest) >=
            best)
            return;
        int target = -1;
        for (int t = 0; t < static_cast<int>(g.size()); ++t)
            if (deficit[t] > 0) {
                target = t;
                break;
            }
        for (const auto& c : cands) {
            bool covers = false;
            for (int m : c.members)
                if (m == target) covers = true;
            if (!covers) continue;
            std::vector<int> took;
            for (int m : c.members)
                if (deficit[m] > 0) {
                    --deficit[m];
                    took.push_back(m);
                }
            go(used + 1, left - static_cast<long>(took.size()));
            for (int m : took) ++deficit[m];
        }
    };
    go(0, total);
    return best;
}

}  // namespace

TEST_CASE("branch-and-bound agrees with exhaustive search") {
    struct Case {
        Grid g;
        long k;
        std::optional<Index> missing;
    };
    std::vector<Case> cases;
    cases.push_back({make_halfrect(3, 5), 1, Index{1, 1, 0}});
    cases.push_back({make_halfrect(3, 4), 1, std::nullopt});
    cases.push_back({make_simplex(4), 1, make_simplex(4).vertex()});
    cases.push_back({make_generic2(4, 16), 2, make_generic2(4, 16).vertex()});
    cases.push_back({make_conical(4, 17), 1, std::nullopt});
    for (auto& c : cases) {
        long truth = exhaustive_cov(c.g, c.k, c.missing);
        CovResult r = cov(c.g, c.k, c.missing);
        CHECK(r.value == truth);
    }
}
