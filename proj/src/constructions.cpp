#include "covergrid/constructions.hpp"

#include <algorithm>

#include "covergrid/errors.hpp"

namespace covergrid {

namespace {

void require_kind(const Grid& g, GridKind k, const char* who) {
    if (g.kind() != k)
        throw BadInput(std::string(who) + ": wrong grid kind, expected " + kind_name(k));
}

Rat ceil_rat(const Rat& v) { return Rat(v.ceil()); }

Hyperplane axis_plane(const Grid& g, int axis, int idx) {
    std::vector<Rat> u(g.dim(), Rat(0));
    u[axis] = Rat(1);
    return Hyperplane::from_rationals(u, g.axes()[axis][idx]);
}

// x/a_i + y/b_j (+ z/c_k) = 1 with the zero entries dropped; indices give
// which axes participate (-1 = absent).
Hyperplane intercept_plane(const Grid& g, int i, int j, int k) {
    std::vector<Rat> u(g.dim(), Rat(0));
    if (i >= 0) u[0] = Rat(1) / g.axes()[0][i];
    if (j >= 0) u[1] = Rat(1) / g.axes()[1][j];
    if (k >= 0) u[2] = Rat(1) / g.axes()[2][k];
    return Hyperplane::from_rationals(u, Rat(1));
}

}  // namespace

Cover rows_cover(const Grid& g, long k) {
    require_kind(g, GridKind::conical, "rows_cover");
    if (k < 1) throw BadInput("rows_cover: k must be >= 1");
    Cover c;
    for (std::size_t i = 0; i < g.axes()[1].size(); ++i)
        c.entries.push_back(CoverEntry{axis_plane(g, 1, static_cast<int>(i)),
                                       std::nullopt, k});
    return c;
}

Cover simplex_cover(const Grid& g, long k) {
    require_kind(g, GridKind::simplex, "simplex_cover");
    if (k < 1) throw BadInput("simplex_cover: k must be >= 1");
    Cover c;
    for (int i = 1; i <= g.order() - 1; ++i)
        c.entries.push_back(CoverEntry{
            Hyperplane::from_rationals({Rat(1), Rat(1)}, Rat(i)), std::nullopt, k});
    return c;
}

Cover generic2_cover(const Grid& g, long k) {
    require_kind(g, GridKind::generic2, "generic2_cover");
    const int n = g.order();
    if (n < 4) throw BadInput("generic2_cover: order must be >= 4");
    if (k < 1) throw BadInput("generic2_cover: k must be >= 1");
    const int h = (n + 1) / 2;  // ceil(n/2)
    Cover c;
    for (int i = 1; i <= h; ++i) {
        c.entries.push_back(CoverEntry{axis_plane(g, 0, i), std::nullopt, k});
        c.entries.push_back(CoverEntry{axis_plane(g, 1, i), std::nullopt, k});
    }
    // Boundary points (a_i, 0) and (0, b_i) with i > ceil(n/2), paired by
    // equal index in decreasing order; the pairing line x/a_i + y/b_i = 1
    // misses the vertex by construction.
    for (int i = n - 1; i > h; --i) {
        Hyperplane pair = intercept_plane(g, i, i, -1);
        long on = 0;
        for (const Index& p : g.points())
            if (pair.incident(g, p)) ++on;
        if (on > 2) {
            // Non-generic input: the pairing line picked up a third point.
            // Fall back to one avoiding line per endpoint.
            for (Index pt : {Index{i, 0, 0}, Index{0, i, 0}}) {
                CoveringSet single{CoveringSet::Tag::singleton, std::nullopt,
                                   {g.point_pos(pt)}};
                c.entries.push_back(CoverEntry{
                    realize_candidate(g, single, Index{0, 0, 0}), std::nullopt, k});
            }
        } else {
            c.entries.push_back(CoverEntry{pair, std::nullopt, k});
        }
    }
    return c;
}

Cover generic3_family(const Grid& g) {
    require_kind(g, GridKind::generic3, "generic3_family");
    const int n = g.order();
    if (n < 3) throw BadInput("generic3_family: order must be >= 3");
    Cover c;
    const Rat two_thirds = Rat(2L * n, 3);
    const Rat third = Rat(n, 3);
    const long t23 = static_cast<long>(two_thirds.floor().get_si());
    const long t13 = static_cast<long>(third.floor().get_si());
    const long ceil13 = static_cast<long>(third.ceil().get_si());

    // type 1: axis planes near the vertex
    for (int i = 1; i <= t23; ++i) {
        long cnt = ceil_rat(two_thirds - Rat(i)).num().get_si();
        if (cnt <= 0) continue;
        for (int ax = 0; ax < 3; ++ax)
            c.entries.push_back(CoverEntry{axis_plane(g, ax, i), std::nullopt, cnt});
    }
    // type 2: two-axis intercept planes, inner indices
    for (int i = 1; i <= t13; ++i) {
        c.entries.push_back(CoverEntry{intercept_plane(g, i, i, -1), std::nullopt, i});
        c.entries.push_back(CoverEntry{intercept_plane(g, -1, i, i), std::nullopt, i});
        c.entries.push_back(CoverEntry{intercept_plane(g, i, -1, i), std::nullopt, i});
    }
    // type 3: two-axis intercept planes, outer indices
    for (int i = t13 + 1; i <= n; ++i) {
        c.entries.push_back(CoverEntry{intercept_plane(g, i, i, -1), std::nullopt, ceil13});
        c.entries.push_back(CoverEntry{intercept_plane(g, -1, i, i), std::nullopt, ceil13});
        c.entries.push_back(CoverEntry{intercept_plane(g, i, -1, i), std::nullopt, ceil13});
    }
    // type 4: full intercept planes, inner indices
    for (int i = 1; i <= t23; ++i) {
        long cnt = ceil_rat((Rat(i) - third).abs()).num().get_si();
        if (cnt <= 0) continue;
        c.entries.push_back(CoverEntry{intercept_plane(g, i, i, i), std::nullopt, cnt});
    }
    // type 5: full intercept planes, outer indices
    for (int i = t23 + 1; i <= n; ++i)
        c.entries.push_back(CoverEntry{intercept_plane(g, i, i, i), std::nullopt, ceil13});
    return c;
}

Cover generic3_cover(const Grid& g, long k) {
    require_kind(g, GridKind::generic3, "generic3_cover");
    const int n = g.order();
    if (n < 3) throw BadInput("generic3_cover: order must be >= 3");
    if (k < 1) throw BadInput("generic3_cover: k must be >= 1");
    const long q = k / n;
    const long v = k - q * n;
    Cover c;
    if (q > 0) {
        Cover fam = generic3_family(g);
        for (auto& e : fam.entries) {
            e.mult *= q;
            c.entries.push_back(std::move(e));
        }
    }
    if (v > 0)
        for (int i = 1; i <= n; ++i)
            for (int ax = 0; ax < 3; ++ax)
                c.entries.push_back(CoverEntry{axis_plane(g, ax, i), std::nullopt, v});
    return c;
}

Cover halfrect_cover(const Grid& g, const Index& p) {
    require_kind(g, GridKind::halfrect, "halfrect_cover");
    if (!g.contains(p)) throw BadInput("halfrect_cover: P is not a grid point");
    const long n = g.order();
    const long m = *g.m();
    const long x0 = p[0], y0 = p[1];
    Cover c;
    for (long i = 0; i < y0; ++i)
        c.entries.push_back(CoverEntry{
            Hyperplane::from_rationals({Rat(0), Rat(1)}, Rat(i)), std::nullopt, 1});
    for (long i = 0; i < x0; ++i)
        c.entries.push_back(CoverEntry{
            Hyperplane::from_rationals({Rat(1), Rat(0)}, Rat(i)), std::nullopt, 1});
    const long top = n - 1 - Rat((n - m) * y0, m - 1).ceil().get_si();
    for (long i = x0 + y0 + 1; i <= top; ++i)
        c.entries.push_back(CoverEntry{
            Hyperplane::from_rationals({Rat(1), Rat(1)}, Rat(i)), std::nullopt, 1});
    return c;
}

std::optional<Cover> construction_incumbent(const Grid& g, long k,
                                            const std::optional<Index>& missing) {
    const auto vertex = g.vertex();
    const bool miss_vertex = missing && vertex && *missing == *vertex;
    switch (g.kind()) {
        case GridKind::conical:
            if (!missing) return rows_cover(g, k);
            return std::nullopt;
        case GridKind::simplex:
            if (miss_vertex) return simplex_cover(g, k);
            return std::nullopt;
        case GridKind::generic2:
            if (miss_vertex && g.order() >= 4) return generic2_cover(g, k);
            return std::nullopt;
        case GridKind::generic3:
            if (miss_vertex && g.order() >= 3) return generic3_cover(g, k);
            return std::nullopt;
        case GridKind::halfrect:
            if (missing && k == 1) return halfrect_cover(g, *missing);
            return std::nullopt;
        case GridKind::fullgrid: {
            // Alon-Furedi style cover: k copies of every non-vertex axis line.
            if (!miss_vertex) return std::nullopt;
            Cover c;
            for (std::size_t i = 1; i < g.axes()[0].size(); ++i)
                c.entries.push_back(CoverEntry{
                    Hyperplane::from_rationals({Rat(1), Rat(0)}, g.axes()[0][i]),
                    std::nullopt, k});
            for (std::size_t j = 1; j < g.axes()[1].size(); ++j)
                c.entries.push_back(CoverEntry{
                    Hyperplane::from_rationals({Rat(0), Rat(1)}, g.axes()[1][j]),
                    std::nullopt, k});
            return c;
        }
        default:
            return std::nullopt;
    }
}

ConstructionReport construct_report(const Grid& g, const std::string& scheme, long k,
                                    std::optional<Index> p) {
    ConstructionReport rep;
    rep.scheme = scheme;
    rep.k = k;
    const long n = g.order();
    long cover_k = k;
    if (scheme == "rows") {
        rep.cover = rows_cover(g, k);
        rep.claimed = Rat(n * k);
        rep.missing = std::nullopt;
    } else if (scheme == "simplex") {
        rep.cover = simplex_cover(g, k);
        rep.claimed = Rat((n - 1) * k);
        rep.missing = g.vertex();
    } else if (scheme == "generic2") {
        rep.cover = generic2_cover(g, k);
        rep.claimed = Rat(3 * n * k, 2) + Rat(k, 2);
        rep.missing = g.vertex();
    } else if (scheme == "generic3") {
        rep.cover = generic3_cover(g, k);
        const long q = k / n, v = k - (k / n) * n;
        rep.claimed = Rat(q) * (Rat(31 * n * n, 18) + Rat(6 * n)) + Rat(3 * v * n);
        rep.missing = g.vertex();
    } else if (scheme == "generic3-family") {
        rep.cover = generic3_family(g);
        rep.claimed = Rat(31 * n * n, 18) + Rat(6 * n);
        rep.missing = g.vertex();
        cover_k = n;  // the single family covers n-fold
        rep.k = n;
    } else if (scheme == "halfrect") {
        if (!p) throw BadInput("construct_report: halfrect scheme needs a point");
        rep.cover = halfrect_cover(g, *p);
        rep.claimed =
            Rat(n - 1) - Rat(Rat((n - *g.m()) * (*p)[1], *g.m() - 1).ceil());
        rep.missing = p;
        cover_k = 1;
        rep.k = 1;
    } else {
        throw BadInput("construct_report: unknown scheme '" + scheme + "'");
    }
    rep.actual = rep.cover.total();
    CoverReport vr = verify_cover(g, rep.cover, cover_k, rep.missing);
    rep.min_coverage = vr.min_coverage;
    rep.verified = vr.ok && Rat(rep.actual) <= rep.claimed;
    return rep;
}

}  // namespace covergrid
