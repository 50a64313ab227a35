#include <algorithm>
#include <optional>
#include <tuple>
#include <vector>

#include "covergrid/errors.hpp"
#include "covergrid/grid.hpp"

// Genericity checks run over integer-scaled coordinates. Grids whose axis
// values clear to small integers (every generator here: denominators divide
// 2^20, numerators < 2^25) take an __int128 path; anything else falls back to
// mpz. Collinearity and coplanarity are found by anchor-based canonical-key
// collisions, which keeps the 4-point coplanar scan at O(P^3) keys.

namespace covergrid {

namespace {

using i128 = __int128;

i128 abs_z(i128 x) { return x < 0 ? -x : x; }

i128 gcd_z(i128 a, i128 b) {
    a = abs_z(a);
    b = abs_z(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Axis values scaled to integers, per axis. Returns nullopt when the scaled
// values do not comfortably fit in 64 bits.
std::optional<std::vector<std::vector<long long>>> scale_axes_int64(const Grid& g) {
    const long long limit = 1LL << 40;
    mpz_class lcm = 1;
    for (const auto& ax : g.axes())
        for (const Rat& v : ax) {
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
            lcm = l;
            if (!lcm.fits_slong_p() || lcm.get_si() > limit) return std::nullopt;
        }
    std::vector<std::vector<long long>> out(g.axes().size());
    for (std::size_t t = 0; t < g.axes().size(); ++t) {
        for (const Rat& v : g.axes()[t]) {
            mpz_class s = v.num() * (lcm / v.den());
            if (!s.fits_slong_p() || std::abs(s.get_si()) > limit) return std::nullopt;
            out[t].push_back(s.get_si());
        }
    }
    return out;
}

std::vector<std::vector<mpz_class>> scale_axes_mpz(const Grid& g) {
    mpz_class lcm = 1;
    for (const auto& ax : g.axes())
        for (const Rat& v : ax) {
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
            lcm = l;
        }
    std::vector<std::vector<mpz_class>> out(g.axes().size());
    for (std::size_t t = 0; t < g.axes().size(); ++t)
        for (const Rat& v : g.axes()[t]) out[t].push_back(v.num() * (lcm / v.den()));
    return out;
}

// Collinear-triple finder on 2D integer points. Lines parallel to an axis are
// exempt; with exempt_origin_lines also lines through (0,0) (the u.x = 1
// family cannot express them).
template <class Z, class Pt2>
std::optional<std::array<int, 3>> find_collinear(const std::vector<Pt2>& c,
                                                 bool exempt_origin_lines) {
    const int P = static_cast<int>(c.size());
    std::vector<std::tuple<Z, Z, int>> dirs;
    for (int a = 0; a < P; ++a) {
        dirs.clear();
        for (int b = a + 1; b < P; ++b) {
            Z dx = Z(c[b][0]) - Z(c[a][0]);
            Z dy = Z(c[b][1]) - Z(c[a][1]);
            if (dx == 0 || dy == 0) continue;
            Z g = gcd_z(dx, dy);
            dx /= g;
            dy /= g;
            if (dx < 0) {
                dx = -dx;
                dy = -dy;
            }
            if (exempt_origin_lines && Z(c[a][0]) * dy - Z(c[a][1]) * dx == 0) continue;
            dirs.emplace_back(dx, dy, b);
        }
        std::sort(dirs.begin(), dirs.end());
        for (std::size_t t = 1; t < dirs.size(); ++t)
            if (std::get<0>(dirs[t]) == std::get<0>(dirs[t - 1]) &&
                std::get<1>(dirs[t]) == std::get<1>(dirs[t - 1]))
                return std::array<int, 3>{a, std::get<2>(dirs[t - 1]), std::get<2>(dirs[t])};
    }
    return std::nullopt;
}

// 4 coplanar points on a full-support plane missing the origin, or nullopt.
template <class Z, class Pt3>
std::optional<std::array<int, 4>> find_coplanar4(const std::vector<Pt3>& c) {
    const int P = static_cast<int>(c.size());
    std::vector<std::tuple<Z, Z, Z, Z, int>> keys;
    for (int i = 0; i < P; ++i) {
        for (int j = i + 1; j < P; ++j) {
            Z d1x = Z(c[j][0]) - Z(c[i][0]);
            Z d1y = Z(c[j][1]) - Z(c[i][1]);
            Z d1z = Z(c[j][2]) - Z(c[i][2]);
            keys.clear();
            for (int r = j + 1; r < P; ++r) {
                Z d2x = Z(c[r][0]) - Z(c[i][0]);
                Z d2y = Z(c[r][1]) - Z(c[i][1]);
                Z d2z = Z(c[r][2]) - Z(c[i][2]);
                Z nx = d1y * d2z - d1z * d2y;
                Z ny = d1z * d2x - d1x * d2z;
                Z nz = d1x * d2y - d1y * d2x;
                if (nx == 0 || ny == 0 || nz == 0) continue;  // degenerate or not full support
                Z rhs = nx * Z(c[i][0]) + ny * Z(c[i][1]) + nz * Z(c[i][2]);
                if (rhs == 0) continue;  // plane through origin: unconstrained
                Z g = gcd_z(gcd_z(nx, ny), gcd_z(nz, rhs));
                nx /= g;
                ny /= g;
                nz /= g;
                rhs /= g;
                if (nx < 0) {
                    nx = -nx;
                    ny = -ny;
                    nz = -nz;
                    rhs = -rhs;
                }
                keys.emplace_back(nx, ny, nz, rhs, r);
            }
            std::sort(keys.begin(), keys.end());
            for (std::size_t t = 1; t < keys.size(); ++t) {
                const auto& a = keys[t - 1];
                const auto& b = keys[t];
                if (std::get<0>(a) == std::get<0>(b) && std::get<1>(a) == std::get<1>(b) &&
                    std::get<2>(a) == std::get<2>(b) && std::get<3>(a) == std::get<3>(b))
                    return std::array<int, 4>{i, j, std::get<4>(a), std::get<4>(b)};
            }
        }
    }
    return std::nullopt;
}

template <class Z, class Coord>
GenericityWitness check2_scaled(const Grid& g, const std::vector<std::vector<Coord>>& ax) {
    std::vector<std::array<Coord, 2>> c;
    c.reserve(g.size());
    for (const Index& p : g.points()) c.push_back({ax[0][p[0]], ax[1][p[1]]});
    GenericityWitness w;
    if (auto tri = find_collinear<Z>(c, /*exempt_origin_lines=*/false)) {
        w.ok = false;
        for (int t : *tri) w.points.push_back(g.points()[t]);
        w.what = "three collinear points on a line parallel to neither axis";
    }
    return w;
}

template <class Z, class Coord>
GenericityWitness check3_scaled(const Grid& g, const std::vector<std::vector<Coord>>& ax) {
    GenericityWitness w;
    // (a) axis-aligned slices must be generic in the u1*x + u2*y = 1 sense
    for (int fix = 0; fix < 3; ++fix) {
        int f1 = fix == 0 ? 1 : 0;
        int f2 = fix == 2 ? 1 : 2;
        for (std::size_t v = 0; v < g.axes()[fix].size(); ++v) {
            std::vector<std::array<Coord, 2>> c;
            std::vector<int> who;
            for (int t = 0; t < static_cast<int>(g.size()); ++t) {
                const Index& p = g.points()[t];
                if (p[fix] == static_cast<int>(v)) {
                    c.push_back({ax[f1][p[f1]], ax[f2][p[f2]]});
                    who.push_back(t);
                }
            }
            if (auto tri = find_collinear<Z>(c, /*exempt_origin_lines=*/true)) {
                w.ok = false;
                for (int t : *tri) w.points.push_back(g.points()[who[t]]);
                w.what = "slice " + std::string(1, "xyz"[fix]) + "=" +
                         g.axes()[fix][v].str() + " has 3 points on an admissible line";
                return w;
            }
        }
    }
    // (b) no full-support plane missing the origin carries 4 points
    std::vector<std::array<Coord, 3>> c;
    c.reserve(g.size());
    for (const Index& p : g.points())
        c.push_back({ax[0][p[0]], ax[1][p[1]], ax[2][p[2]]});
    if (auto quad = find_coplanar4<Z>(c)) {
        w.ok = false;
        for (int t : *quad) w.points.push_back(g.points()[t]);
        w.what = "4 coplanar points on a full-support plane missing the origin";
    }
    return w;
}

}  // namespace

GenericityWitness check_generic2(const Grid& g) {
    if (g.dim() != 2) throw BadInput("check_generic2: grid must be 2D");
    if (auto ax = scale_axes_int64(g)) return check2_scaled<i128>(g, *ax);
    return check2_scaled<mpz_class>(g, scale_axes_mpz(g));
}

GenericityWitness check_generic3(const Grid& g) {
    if (g.dim() != 3) throw BadInput("check_generic3: grid must be 3D");
    if (auto ax = scale_axes_int64(g)) return check3_scaled<i128>(g, *ax);
    return check3_scaled<mpz_class>(g, scale_axes_mpz(g));
}

}  // namespace covergrid
