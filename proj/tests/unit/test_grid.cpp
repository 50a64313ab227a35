#include <doctest.h>

#include <set>

#include "covergrid/errors.hpp"
#include "covergrid/grid.hpp"

using namespace covergrid;

namespace {

std::vector<Rat> rats(std::initializer_list<long> xs) {
    std::vector<Rat> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

long row_count(const Grid& g, int row) {
    long c = 0;
    for (const Index& p : g.points())
        if (p[1] == row) ++c;
    return c;
}

}  // namespace

TEST_CASE("conical grid shape and determinism") {
    Grid g1 = make_conical(1, 123);
    CHECK(g1.size() == 1);

    Grid g = make_conical(3, 7);
    CHECK(g.size() == 6);
    CHECK(row_count(g, 0) == 3);
    CHECK(row_count(g, 1) == 2);
    CHECK(row_count(g, 2) == 1);

    Grid a = make_conical(4, 7);
    Grid b = make_conical(4, 7);
    CHECK(a.points() == b.points());
    CHECK(a.axes() == b.axes());
    CHECK(a.size() == 10);  // n(n+1)/2

    CHECK_THROWS_AS(make_conical(0, 1), BadInput);
}

TEST_CASE("half-grid from explicit axes") {
    Grid g = make_halfgrid(rats({0, 1, 2}), rats({0, 1}));
    std::set<Index> want{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}};
    CHECK(std::set<Index>(g.points().begin(), g.points().end()) == want);
    CHECK(g.vertex() == Index{0, 0, 0});

    Grid small = make_halfgrid(rats({0, 1}), rats({0, 1}));
    CHECK(small.size() == 3);

    // equispaced axes reproduce the simplex point set
    Grid h = make_halfgrid(rats({0, 1, 2, 3}), rats({0, 1, 2, 3}));
    Grid s = make_simplex(4);
    CHECK(h.points() == s.points());

    CHECK_THROWS_AS(make_halfgrid(rats({1, 0}), rats({0, 1})), BadInput);
    CHECK_THROWS_AS(make_halfgrid(rats({0, 0, 1}), rats({0, 1})), BadInput);
    CHECK_THROWS_AS(make_halfgrid(rats({0, 1}), rats({0, 1, 2})), BadInput);
}

TEST_CASE("half-rectangular grids") {
    Grid g = make_halfrect(2, 3);
    std::set<Index> want{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}};
    CHECK(std::set<Index>(g.points().begin(), g.points().end()) == want);

    CHECK(make_halfrect(3, 3).size() == 6);

    Grid g35 = make_halfrect(3, 5);
    CHECK(g35.size() == 9);
    CHECK(row_count(g35, 0) == 5);
    CHECK(row_count(g35, 1) == 3);
    CHECK(row_count(g35, 2) == 1);

    CHECK_THROWS_AS(make_halfrect(1, 3), BadInput);
    CHECK_THROWS_AS(make_halfrect(4, 3), BadInput);
}

TEST_CASE("generic2 generator satisfies its own checker") {
    Grid g2 = make_generic2(2, 5);
    CHECK(g2.size() == 3);

    Grid g = make_generic2(6, 1);
    CHECK(check_generic2(g).ok);
    CHECK(g.coord(Index{0, 0, 0}, 0) == Rat(0));
    CHECK(g.coord(Index{0, 0, 0}, 1) == Rat(0));

    Grid h = make_generic2(6, 1);
    CHECK(g.points() == h.points());
    CHECK(g.axes() == h.axes());
}

TEST_CASE("generic3 generator satisfies its own checker") {
    Grid g1 = make_generic3(1, 2);
    CHECK(g1.size() == 4);

    Grid g = make_generic3(3, 5);
    CHECK(g.size() == 20);  // C(6,3)
    CHECK(check_generic3(g).ok);

    Grid h = make_generic3(3, 5);
    CHECK(g.axes() == h.axes());
}

TEST_CASE("check_generic2 finds collinear witnesses") {
    // 3x3 integer grid: the main diagonal breaks genericity
    Grid g = make_fullgrid(rats({0, 1, 2}), rats({0, 1, 2}));
    auto w = check_generic2(g);
    CHECK_FALSE(w.ok);
    CHECK(w.points.size() == 3);

    // two points can never violate
    Grid two = make_fullgrid(rats({0}), rats({0, 5}));
    CHECK(check_generic2(two).ok);
}

TEST_CASE("check_generic3 flags the equally spaced grid") {
    Grid g = make_halfgrid3(rats({0, 1, 2, 3}), rats({0, 1, 2, 3}), rats({0, 1, 2, 3}));
    auto w = check_generic3(g);
    CHECK_FALSE(w.ok);
    CHECK(!w.points.empty());

    // tiny grids are vacuously generic
    Grid t = make_generic3(1, 9);
    CHECK(check_generic3(t).ok);
}

TEST_CASE("3D half-grid point count") {
    for (int n : {1, 2, 3, 4}) {
        Grid g = make_generic3(n, 17);
        long expect = static_cast<long>(n + 1) * (n + 2) * (n + 3) / 6;
        CHECK(static_cast<long>(g.size()) == expect);
    }
}

TEST_CASE("sampler determinism and range") {
    AxisSampler a(42), b(42);
    auto va = a.sorted_distinct(8);
    auto vb = b.sorted_distinct(8);
    CHECK(va == vb);
    for (const Rat& v : va) {
        CHECK(v > Rat(0));
        CHECK(v <= Rat(AxisSampler::range));
        CHECK(Rat(AxisSampler::denom) * v == Rat((Rat(AxisSampler::denom) * v).num()));
    }
    for (std::size_t i = 1; i < va.size(); ++i) CHECK(va[i - 1] < va[i]);
}

TEST_CASE("grid constructor validation") {
    CHECK_THROWS_AS(Grid(2, GridKind::fullgrid, 1, std::nullopt,
                         {rats({0, 0}), rats({0})}, {Index{0, 0, 0}}),
                    BadInput);
    CHECK_THROWS_AS(Grid(2, GridKind::fullgrid, 1, std::nullopt,
                         {rats({0}), rats({0})}, {Index{1, 0, 0}}),
                    BadInput);
    CHECK_THROWS_AS(Grid(4, GridKind::fullgrid, 1, std::nullopt,
                         {rats({0}), rats({0})}, {Index{0, 0, 0}}),
                    BadInput);
}

TEST_CASE("kind invariants are enforced on construction") {
    // a claimed halfrect missing a required point
    CHECK_THROWS_AS(Grid(2, GridKind::halfrect, 3, 2, {rats({0, 1, 2}), rats({0, 1})},
                         {Index{0, 0, 0}, Index{1, 0, 0}, Index{2, 0, 0}}),
                    BadInput);
    // a claimed halfrect with a point past the diagonal
    CHECK_THROWS_AS(Grid(2, GridKind::halfrect, 3, 2, {rats({0, 1, 2}), rats({0, 1})},
                         {Index{0, 0, 0}, Index{1, 0, 0}, Index{2, 0, 0},
                          Index{0, 1, 0}, Index{1, 1, 0}}),
                    BadInput);
    // a conical grid with the wrong row profile
    CHECK_THROWS_AS(Grid(2, GridKind::conical, 2, std::nullopt,
                         {rats({0, 1}), rats({0, 1})},
                         {Index{0, 0, 0}, Index{0, 1, 0}, Index{1, 1, 0}}),
                    BadInput);
    // generic3 axes must begin at 0
    CHECK_THROWS_AS(Grid(3, GridKind::generic3, 1, std::nullopt,
                         {rats({1, 2}), rats({0, 1}), rats({0, 1})},
                         {Index{0, 0, 0}, Index{1, 0, 0}, Index{0, 1, 0},
                          Index{0, 0, 1}}),
                    BadInput);
    // the valid shape passes
    Grid ok(2, GridKind::halfrect, 3, 2, {rats({0, 1, 2}), rats({0, 1})},
            {Index{0, 0, 0}, Index{1, 0, 0}, Index{2, 0, 0}, Index{0, 1, 0}});
    CHECK(ok.size() == 4);
}
