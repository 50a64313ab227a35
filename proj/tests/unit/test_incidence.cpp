#include <doctest.h>

#include <algorithm>
#include <set>

#include "covergrid/candidates.hpp"
#include "covergrid/errors.hpp"
#include "covergrid/grid.hpp"
#include "covergrid/incidence.hpp"

using namespace covergrid;

namespace {

std::vector<Rat> rats(std::initializer_list<long> xs) {
    std::vector<Rat> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Hyperplane hp(std::initializer_list<long> coeffs, long rhs) {
    std::vector<mpz_class> c;
    for (long v : coeffs) c.emplace_back(v);
    return Hyperplane(std::move(c), mpz_class(rhs));
}

}  // namespace

TEST_CASE("incidence basics") {
    CHECK(hp({1, 1}, 0).incident({Rat(0), Rat(0)}));
    CHECK_FALSE(hp({1, 1}, 1).incident({Rat(1), Rat(2)}));
    CHECK(hp({1, 1}, 1).incident({Rat(1, 2), Rat(1, 2)}));
}

TEST_CASE("line_through canonical forms") {
    CHECK(Hyperplane::line_through({Rat(0), Rat(0)}, {Rat(1), Rat(1)}) == hp({1, -1}, 0));
    CHECK(Hyperplane::line_through({Rat(0), Rat(1)}, {Rat(1), Rat(0)}) == hp({1, 1}, 1));
    CHECK(Hyperplane::line_through({Rat(0), Rat(1, 2)}, {Rat(1), Rat(1, 2)}) ==
          hp({0, 2}, 1));
    CHECK_THROWS_AS(Hyperplane::line_through({Rat(1), Rat(1)}, {Rat(1), Rat(1)}),
                    BadInput);
}

TEST_CASE("canonicalization soundness property") {
    AxisSampler s(5);
    auto xs = s.sorted_distinct(6);
    auto ys = s.sorted_distinct(6);
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            if (i == j) continue;
            std::vector<Rat> p{xs[i], ys[i]}, q{xs[j], ys[j]};
            Hyperplane h = Hyperplane::line_through(p, q);
            CHECK(h.incident(p));
            CHECK(h.incident(q));
            CHECK(Hyperplane::line_through(q, p) == h);
        }
    }
}

TEST_CASE("plane_through and degenerate spans") {
    auto h = Hyperplane::plane_through({Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)},
                                       {Rat(0), Rat(0), Rat(1)});
    REQUIRE(h.has_value());
    CHECK(*h == hp({1, 1, 1}, 1));
    // collinear triple has no spanned plane
    CHECK_FALSE(Hyperplane::plane_through({Rat(0), Rat(0), Rat(0)},
                                          {Rat(1), Rat(1), Rat(1)},
                                          {Rat(2), Rat(2), Rat(2)})
                    .has_value());
}

TEST_CASE("candidates on the 2x2 grid missing the corner") {
    Grid g = make_fullgrid(rats({0, 1}), rats({0, 1}));
    auto cands = enumerate_candidates2(g, Index{0, 0, 0});
    std::set<Hyperplane> spanned;
    int singles = 0;
    for (const auto& c : cands) {
        if (c.tag == CoveringSet::Tag::spanned) spanned.insert(*c.plane);
        else ++singles;
    }
    CHECK(spanned == std::set<Hyperplane>{hp({1, 0}, 1), hp({0, 1}, 1), hp({1, 1}, 1)});
    CHECK(singles == 3);
    // excluded lines all pass through the missing corner
    CHECK_FALSE(spanned.count(hp({1, 0}, 0)));
    CHECK_FALSE(spanned.count(hp({0, 1}, 0)));
    CHECK_FALSE(spanned.count(hp({1, -1}, 0)));
}

TEST_CASE("candidates on a conical grid of order 2") {
    Grid g = make_conical(2, 3);
    auto cands = enumerate_candidates2(g, std::nullopt);
    int spanned = 0, singles = 0;
    for (const auto& c : cands) {
        if (c.tag == CoveringSet::Tag::spanned) {
            ++spanned;
            CHECK(c.members.size() == 2);  // maximal collinear sets are pairs
        } else {
            ++singles;
        }
    }
    CHECK(spanned == 3);
    CHECK(singles == 3);
}

TEST_CASE("single-point grid yields one singleton") {
    Grid g = make_fullgrid(rats({2}), rats({5}));
    auto cands = enumerate_candidates2(g, std::nullopt);
    REQUIRE(cands.size() == 1);
    CHECK(cands[0].tag == CoveringSet::Tag::singleton);
}

TEST_CASE("paper-literal column set drops singletons") {
    Grid g = make_fullgrid(rats({0, 1}), rats({0, 1}));
    CandidateOptions opt;
    opt.paper_literal = true;
    auto cands = enumerate_candidates2(g, Index{0, 0, 0}, opt);
    for (const auto& c : cands) CHECK(c.tag == CoveringSet::Tag::spanned);
    CHECK(cands.size() == 3);
}

TEST_CASE("3D candidates: four points in general position") {
    Grid g = make_generic3(1, 4);  // origin + one point per axis
    auto cands = enumerate_candidates3(g, std::nullopt);
    int planes = 0, line_sets = 0, singles = 0;
    for (const auto& c : cands) {
        if (c.tag == CoveringSet::Tag::spanned) ++planes;
        if (c.tag == CoveringSet::Tag::line_set) ++line_sets;
        if (c.tag == CoveringSet::Tag::singleton) ++singles;
    }
    CHECK(planes == 4);
    CHECK(line_sets == 6);
    CHECK(singles == 4);
}

TEST_CASE("3D candidates: axis lines become maximal line-set candidates") {
    // the x-axis of an order-2 half-grid carries 3 collinear points; with no
    // missing point it must appear as a single maximal line-set candidate
    Grid g = make_generic3(2, 6);
    auto cands = enumerate_candidates3(g, std::nullopt);
    int collinear_triples = 0;
    for (const auto& c : cands) {
        if (c.tag != CoveringSet::Tag::line_set) continue;
        CHECK(c.members.size() >= 2);
        if (c.members.size() == 3) ++collinear_triples;
    }
    CHECK(collinear_triples == 3);  // one per coordinate axis

    // with the origin missing, lines through it are no longer candidates
    auto avoiding = enumerate_candidates3(g, Index{0, 0, 0});
    for (const auto& c : avoiding)
        if (c.tag == CoveringSet::Tag::line_set) CHECK(c.members.size() == 2);
}

TEST_CASE("3D candidates with missing origin") {
    Grid g = make_generic3(1, 4);
    auto cands = enumerate_candidates3(g, Index{0, 0, 0});
    // the plane through the three axis points is a candidate
    bool found_axis_plane = false;
    for (const auto& c : cands) {
        if (c.tag == CoveringSet::Tag::spanned) {
            CHECK(c.members.size() == 3);
            found_axis_plane = true;
            CHECK_FALSE(c.plane->incident(g, Index{0, 0, 0}));
        }
        if (c.tag == CoveringSet::Tag::line_set) {
            // lines through two axis points avoid the origin
            CHECK(c.members.size() == 2);
        }
    }
    CHECK(found_axis_plane);
}

TEST_CASE("candidate members are exactly the incident points") {
    Grid g = make_generic2(5, 9);
    auto cands = enumerate_candidates2(g, g.vertex());
    int mpos = g.point_pos(*g.vertex());
    for (const auto& c : cands) {
        Hyperplane h = realize_candidate(g, c, g.vertex());
        std::vector<int> inc;
        for (int t = 0; t < static_cast<int>(g.size()); ++t)
            if (t != mpos && h.incident(g, g.points()[t])) inc.push_back(t);
        CHECK(inc == c.members);
        CHECK_FALSE(h.incident(g, *g.vertex()));
    }
}

TEST_CASE("line_through reproduces a line from any two of its members") {
    Grid g = make_halfrect(3, 5);
    auto cands = enumerate_candidates2(g, std::nullopt);
    for (const auto& c : cands) {
        if (c.tag != CoveringSet::Tag::spanned) continue;
        for (std::size_t i = 0; i < c.members.size(); ++i)
            for (std::size_t j = i + 1; j < c.members.size(); ++j) {
                Hyperplane again =
                    Hyperplane::line_through(g.coords(g.points()[c.members[i]]),
                                             g.coords(g.points()[c.members[j]]));
                CHECK(again == *c.plane);
            }
    }
}

TEST_CASE("candidate count bound and dedup") {
    Grid g = make_halfrect(3, 4);
    auto cands = enumerate_candidates2(g, std::nullopt);
    std::size_t P = g.size();
    CHECK(cands.size() <= P * (P - 1) / 2 + P);
    std::set<std::vector<int>> members;
    for (const auto& c : cands) CHECK(members.insert(c.members).second);
}

TEST_CASE("every admissible line is dominated by a candidate") {
    // completeness on a small grid: arbitrary rational lines avoiding the
    // missing point cover a subset of some enumerated candidate
    Grid g = make_halfrect(3, 4);
    Index missing{1, 1, 0};
    auto cands = enumerate_candidates2(g, missing);
    std::set<std::vector<int>> member_sets;
    for (const auto& c : cands) member_sets.insert(c.members);
    int mpos = g.point_pos(missing);

    AxisSampler s(31);
    auto as = s.sorted_distinct(12);
    for (std::size_t i = 0; i + 3 < as.size(); i += 2) {
        // random-ish line a x + b y = c
        std::vector<Rat> coeffs{as[i] - Rat(1), as[i + 1]};
        Hyperplane h = Hyperplane::from_rationals(coeffs, as[i + 2]);
        if (h.incident(g, missing)) continue;
        std::vector<int> inc;
        for (int t = 0; t < static_cast<int>(g.size()); ++t)
            if (t != mpos && h.incident(g, g.points()[t])) inc.push_back(t);
        if (inc.empty()) continue;
        bool dominated = false;
        for (const auto& mem : member_sets)
            if (std::includes(mem.begin(), mem.end(), inc.begin(), inc.end()))
                dominated = true;
        CHECK(dominated);
    }
}

TEST_CASE("verify_cover reports") {
    Grid g = make_conical(3, 7);
    Cover rows;
    for (int i = 0; i < 3; ++i)
        rows.entries.push_back(CoverEntry{
            Hyperplane::from_rationals({Rat(0), Rat(1)}, g.axes()[1][i]), std::nullopt,
            2});
    CoverReport ok = verify_cover(g, rows, 2, std::nullopt);
    CHECK(ok.ok);
    CHECK(ok.min_coverage >= 2);

    Cover empty;
    CoverReport bad = verify_cover(g, empty, 1, std::nullopt);
    CHECK_FALSE(bad.ok);
    CHECK(bad.violations.size() == g.size());

    // a cover through the missing point gets flagged
    Grid f = make_fullgrid(rats({0, 1}), rats({0, 1}));
    Cover thru;
    thru.entries.push_back(CoverEntry{hp({1, 0}, 0), std::nullopt, 1});  // x=0 hits (0,0)
    CoverReport viol = verify_cover(f, thru, 1, Index{0, 0, 0});
    CHECK_FALSE(viol.ok);
    bool missing_flagged = false;
    for (const auto& v : viol.violations)
        if (v.missing_hit) missing_flagged = true;
    CHECK(missing_flagged);
}

TEST_CASE("synthetic singleton realization avoids other points") {
    Grid g = make_halfrect(3, 5);
    for (int pos : {1, 3, 8}) {
        CoveringSet single{CoveringSet::Tag::singleton, std::nullopt, {pos}};
        Hyperplane h = realize_candidate(g, single, Index{0, 0, 0});
        int hits = 0;
        for (const Index& p : g.points())
            if (h.incident(g, p)) ++hits;
        CHECK(hits == 1);
        CHECK(h.incident(g, g.points()[pos]));
    }
}
