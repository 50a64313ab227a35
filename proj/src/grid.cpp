#include "covergrid/grid.hpp"

#include <algorithm>
#include <set>

#include "covergrid/errors.hpp"

namespace covergrid {

std::string kind_name(GridKind k) {
    switch (k) {
        case GridKind::conical: return "conical";
        case GridKind::halfgrid: return "halfgrid";
        case GridKind::halfrect: return "halfrect";
        case GridKind::simplex: return "simplex";
        case GridKind::generic2: return "generic2";
        case GridKind::generic3: return "generic3";
        case GridKind::fullgrid: return "fullgrid";
    }
    throw BadInput("unknown grid kind");
}

GridKind kind_from_name(const std::string& s) {
    if (s == "conical") return GridKind::conical;
    if (s == "halfgrid") return GridKind::halfgrid;
    if (s == "halfrect") return GridKind::halfrect;
    if (s == "simplex") return GridKind::simplex;
    if (s == "generic2") return GridKind::generic2;
    if (s == "generic3") return GridKind::generic3;
    if (s == "fullgrid") return GridKind::fullgrid;
    throw BadInput("unknown grid kind '" + s + "'");
}

Grid::Grid(int dim, GridKind kind, int order, std::optional<int> m,
           std::vector<std::vector<Rat>> axes, std::vector<Index> points,
           std::optional<std::uint64_t> seed)
    : dim_(dim), kind_(kind), order_(order), m_(m),
      axes_(std::move(axes)), points_(std::move(points)), seed_(seed) {
    if (dim_ != 2 && dim_ != 3) throw BadInput("Grid: dim must be 2 or 3");
    if (order_ < 1) throw BadInput("Grid: order must be positive");
    if (axes_.size() != static_cast<std::size_t>(dim_))
        throw BadInput("Grid: axes count != dim");
    for (const auto& ax : axes_) {
        if (ax.empty()) throw BadInput("Grid: empty axis");
        for (std::size_t i = 1; i < ax.size(); ++i)
            if (!(ax[i - 1] < ax[i]))
                throw BadInput("Grid: axis values must be strictly increasing");
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    for (const auto& p : points_) {
        for (int t = 0; t < dim_; ++t)
            if (p[t] < 0 || p[t] >= static_cast<int>(axes_[t].size()))
                throw BadInput("Grid: point index out of axis range");
        if (dim_ == 2 && p[2] != 0)
            throw BadInput("Grid: 2D point with nonzero third index");
    }
    if (points_.empty()) throw BadInput("Grid: no points");
    validate_kind();
}

// The structural shape each kind promises; grids loaded from files go
// through here as well, so downstream code can rely on it.
void Grid::validate_kind() const {
    auto fail = [this](const char* what) {
        throw BadInput("Grid: " + kind_name(kind_) + " " + what);
    };
    auto integer_axis = [](const std::vector<Rat>& ax) {
        for (std::size_t i = 0; i < ax.size(); ++i)
            if (ax[i] != Rat(static_cast<long>(i))) return false;
        return true;
    };
    // expected membership for the half-grid shapes
    auto expect_exactly = [&](auto&& member) {
        std::size_t count = 0;
        for (int i = 0; i < static_cast<int>(axes_[0].size()); ++i)
            for (int j = 0; j < static_cast<int>(axes_[1].size()); ++j)
                for (int k = 0;
                     k < (dim_ == 3 ? static_cast<int>(axes_[2].size()) : 1); ++k)
                    if (member(i, j, k)) {
                        ++count;
                        if (!contains(Index{i, j, k})) fail("grid is missing a point");
                    }
        if (count != points_.size()) fail("grid has extra points");
    };
    const long n = order_;
    switch (kind_) {
        case GridKind::conical: {
            if (dim_ != 2) fail("must be 2D");
            if (static_cast<long>(axes_[1].size()) != n) fail("needs n row values");
            std::vector<long> per_row(n, 0);
            for (const Index& p : points_) per_row[p[1]] += 1;
            for (long i = 0; i < n; ++i)
                if (per_row[i] != n - i) fail("row sizes must be n-i");
            break;
        }
        case GridKind::halfgrid:
        case GridKind::halfrect:
        case GridKind::generic2: {
            if (dim_ != 2) fail("must be 2D");
            long m = kind_ == GridKind::generic2 ? n : (m_ ? *m_ : -1);
            if (m < 2 || m > n) fail("needs 2 <= m <= n");
            if (static_cast<long>(axes_[0].size()) != n ||
                static_cast<long>(axes_[1].size()) != m)
                fail("axis lengths must match (n, m)");
            if (kind_ == GridKind::halfrect &&
                !(integer_axis(axes_[0]) && integer_axis(axes_[1])))
                fail("requires integer axes 0..n-1");
            if (kind_ == GridKind::generic2 &&
                !(axes_[0][0].is_zero() && axes_[1][0].is_zero()))
                fail("axes must start at the vertex 0");
            expect_exactly([&](int i, int j, int) {
                return (m - 1) * static_cast<long>(i) + (n - 1) * static_cast<long>(j) <=
                       (m - 1) * (n - 1);
            });
            break;
        }
        case GridKind::simplex:
            if (dim_ != 2) fail("must be 2D");
            if (static_cast<long>(axes_[0].size()) != n ||
                !integer_axis(axes_[0]) || !integer_axis(axes_[1]))
                fail("requires integer axes 0..n-1");
            expect_exactly([&](int i, int j, int) { return i + j <= n - 1; });
            break;
        case GridKind::generic3:
            if (dim_ != 3) fail("must be 3D");
            for (const auto& ax : axes_) {
                if (static_cast<long>(ax.size()) != n + 1) fail("axes need n+1 values");
                if (!ax[0].is_zero()) fail("axes must start at 0");
            }
            expect_exactly([&](int i, int j, int k) { return i + j + k <= n; });
            break;
        case GridKind::fullgrid:
            if (dim_ != 2) fail("must be 2D");
            if (static_cast<long>(axes_[0].size()) != n) fail("order must be |S1|");
            if (!m_ || static_cast<long>(axes_[1].size()) != *m_)
                fail("m must be |S2|");
            expect_exactly([](int, int, int) { return true; });
            break;
    }
}

std::vector<Rat> Grid::coords(const Index& p) const {
    std::vector<Rat> c(dim_);
    for (int t = 0; t < dim_; ++t) c[t] = axes_[t][p[t]];
    return c;
}

bool Grid::contains(const Index& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

int Grid::point_pos(const Index& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) return -1;
    return static_cast<int>(it - points_.begin());
}

std::optional<Index> Grid::vertex() const {
    Index zero{0, 0, 0};
    if (contains(zero)) return zero;
    return std::nullopt;
}

// xoshiro256** seeded via splitmix64; self-contained so draws are identical
// on every platform and toolchain.
namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

AxisSampler::AxisSampler(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64(s);
}

std::uint64_t AxisSampler::next_u64() {
    std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

std::vector<Rat> AxisSampler::sorted_distinct(int count) {
    const std::uint64_t bound = static_cast<std::uint64_t>(denom) * range;
    const std::uint64_t threshold = (-bound) % bound;
    std::set<std::uint64_t> us;
    while (us.size() < static_cast<std::size_t>(count)) {
        std::uint64_t r = next_u64();
        if (r < threshold) continue;  // rejection keeps the draw uniform
        us.insert(r % bound + 1);
    }
    std::vector<Rat> out;
    out.reserve(count);
    for (std::uint64_t u : us) out.emplace_back(static_cast<long long>(u), denom);
    return out;
}

Grid make_conical(int n, std::uint64_t seed) {
    if (n < 1) throw BadInput("make_conical: n must be >= 1");
    AxisSampler sampler(seed);
    std::vector<Rat> ys = sampler.sorted_distinct(n);
    std::vector<std::vector<Rat>> rows(n);
    std::vector<Rat> xs;
    for (int i = 0; i < n; ++i) rows[i] = sampler.sorted_distinct(n - i);
    for (const auto& row : rows)
        for (const Rat& x : row) xs.push_back(x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    auto pos = [&xs](const Rat& v) {
        return static_cast<int>(std::lower_bound(xs.begin(), xs.end(), v) - xs.begin());
    };
    std::vector<Index> pts;
    for (int i = 0; i < n; ++i)
        for (const Rat& x : rows[i]) pts.push_back(Index{pos(x), i, 0});
    return Grid(2, GridKind::conical, n, std::nullopt, {xs, ys}, std::move(pts), seed);
}

namespace {

void require_axis(const std::vector<Rat>& s, const char* who) {
    if (s.empty()) throw BadInput(std::string(who) + ": empty axis");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!(s[i - 1] < s[i]))
            throw BadInput(std::string(who) + ": axis not strictly increasing");
}

std::vector<Index> halfgrid_points(int n, int m) {
    std::vector<Index> pts;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            if (static_cast<long>(m - 1) * i + static_cast<long>(n - 1) * j <=
                static_cast<long>(m - 1) * (n - 1))
                pts.push_back(Index{i, j, 0});
    return pts;
}

}  // namespace

Grid make_halfgrid(std::vector<Rat> s1, std::vector<Rat> s2) {
    require_axis(s1, "make_halfgrid");
    require_axis(s2, "make_halfgrid");
    if (s2.size() < 2) throw BadInput("make_halfgrid: need |S2| >= 2");
    if (s2.size() > s1.size()) throw BadInput("make_halfgrid: need |S2| <= |S1|");
    int n = static_cast<int>(s1.size()), m = static_cast<int>(s2.size());
    return Grid(2, GridKind::halfgrid, n, m, {std::move(s1), std::move(s2)},
                halfgrid_points(n, m));
}

Grid make_halfrect(int m, int n) {
    if (m < 2) throw BadInput("make_halfrect: m must be >= 2");
    if (m > n) throw BadInput("make_halfrect: need m <= n");
    std::vector<Rat> s1, s2;
    for (int i = 0; i < n; ++i) s1.emplace_back(i);
    for (int j = 0; j < m; ++j) s2.emplace_back(j);
    return Grid(2, GridKind::halfrect, n, m, {std::move(s1), std::move(s2)},
                halfgrid_points(n, m));
}

Grid make_simplex(int n) {
    if (n < 1) throw BadInput("make_simplex: n must be >= 1");
    std::vector<Rat> ax;
    for (int i = 0; i < n; ++i) ax.emplace_back(i);
    std::vector<Index> pts;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j + i < n; ++j) pts.push_back(Index{i, j, 0});
    return Grid(2, GridKind::simplex, n, std::nullopt, {ax, ax}, std::move(pts));
}

Grid make_fullgrid(std::vector<Rat> s1, std::vector<Rat> s2,
                   std::optional<std::uint64_t> seed) {
    require_axis(s1, "make_fullgrid");
    require_axis(s2, "make_fullgrid");
    int n = static_cast<int>(s1.size()), m = static_cast<int>(s2.size());
    std::vector<Index> pts;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) pts.push_back(Index{i, j, 0});
    return Grid(2, GridKind::fullgrid, n, m, {std::move(s1), std::move(s2)},
                std::move(pts), seed);
}

Grid make_fullgrid_sampled(int n1, int n2, std::uint64_t seed) {
    if (n1 < 1 || n2 < 1) throw BadInput("make_fullgrid_sampled: sizes must be >= 1");
    AxisSampler sampler(seed);
    auto s1 = sampler.sorted_distinct(n1);
    auto s2 = sampler.sorted_distinct(n2);
    return make_fullgrid(std::move(s1), std::move(s2), seed);
}

static constexpr int kGenericRetries = 16;

Grid make_generic2(int n, std::uint64_t seed) {
    if (n < 2) throw BadInput("make_generic2: n must be >= 2");
    AxisSampler sampler(seed);
    for (int attempt = 0; attempt < kGenericRetries; ++attempt) {
        auto s1 = sampler.sorted_distinct(n);
        auto s2 = sampler.sorted_distinct(n);
        for (int i = n - 1; i >= 0; --i) s1[i] = s1[i] - s1[0];
        for (int i = n - 1; i >= 0; --i) s2[i] = s2[i] - s2[0];
        Grid g(2, GridKind::generic2, n, n, {std::move(s1), std::move(s2)},
               halfgrid_points(n, n), seed);
        if (check_generic2(g).ok) return g;
    }
    throw InternalError("make_generic2: genericity retries exhausted for seed " +
                        std::to_string(seed));
}

Grid make_halfgrid3(std::vector<Rat> s1, std::vector<Rat> s2, std::vector<Rat> s3) {
    require_axis(s1, "make_halfgrid3");
    require_axis(s2, "make_halfgrid3");
    require_axis(s3, "make_halfgrid3");
    if (s1.size() != s2.size() || s2.size() != s3.size())
        throw BadInput("make_halfgrid3: axes must have equal length");
    if (!s1[0].is_zero() || !s2[0].is_zero() || !s3[0].is_zero())
        throw BadInput("make_halfgrid3: axes must start at 0");
    int n = static_cast<int>(s1.size()) - 1;
    if (n < 1) throw BadInput("make_halfgrid3: order must be >= 1");
    std::vector<Index> pts;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            for (int k = 0; i + j + k <= n; ++k) pts.push_back(Index{i, j, k});
    return Grid(3, GridKind::generic3, n, std::nullopt,
                {std::move(s1), std::move(s2), std::move(s3)}, std::move(pts));
}

Grid make_generic3(int n, std::uint64_t seed) {
    if (n < 1) throw BadInput("make_generic3: n must be >= 1");
    AxisSampler sampler(seed);
    for (int attempt = 0; attempt < kGenericRetries; ++attempt) {
        std::vector<std::vector<Rat>> ax(3);
        for (auto& a : ax) {
            a = sampler.sorted_distinct(n);
            a.insert(a.begin(), Rat(0));
        }
        Grid g = make_halfgrid3(std::move(ax[0]), std::move(ax[1]), std::move(ax[2]));
        Grid seeded(3, GridKind::generic3, n, std::nullopt, g.axes(), g.points(), seed);
        if (check_generic3(seeded).ok) return seeded;
    }
    throw InternalError("make_generic3: genericity retries exhausted for seed " +
                        std::to_string(seed));
}

}  // namespace covergrid
