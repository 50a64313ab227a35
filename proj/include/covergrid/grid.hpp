#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covergrid/rational.hpp"

namespace covergrid {

/// Index tuple of a grid point. Third component unused (0) in dimension 2.
using Index = std::array<int, 3>;

enum class GridKind { conical, halfgrid, halfrect, simplex, generic2, generic3, fullgrid };

std::string kind_name(GridKind k);
GridKind kind_from_name(const std::string& s);  // throws BadInput

/// A finite labeled point set in dimension 2 or 3. Points are index tuples
/// into the per-axis value lists; coordinates live in `axes`. Points are kept
/// sorted lexicographically and axes strictly increasing.
class Grid {
  public:
    Grid(int dim, GridKind kind, int order, std::optional<int> m,
         std::vector<std::vector<Rat>> axes, std::vector<Index> points,
         std::optional<std::uint64_t> seed = std::nullopt);

    int dim() const { return dim_; }
    GridKind kind() const { return kind_; }
    int order() const { return order_; }
    std::optional<int> m() const { return m_; }
    std::optional<std::uint64_t> seed() const { return seed_; }
    const std::vector<std::vector<Rat>>& axes() const { return axes_; }
    const std::vector<Index>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    const Rat& coord(const Index& p, int axis) const { return axes_[axis][p[axis]]; }
    std::vector<Rat> coords(const Index& p) const;
    bool contains(const Index& p) const;
    int point_pos(const Index& p) const;  // position in points(), -1 if absent

    /// The all-zero-index point, when the grid has one (every kind except
    /// conical, where index (0,0) need not be populated).
    std::optional<Index> vertex() const;

  private:
    void validate_kind() const;  // structural per-kind invariants

    int dim_;
    GridKind kind_;
    int order_;
    std::optional<int> m_;
    std::vector<std::vector<Rat>> axes_;
    std::vector<Index> points_;
    std::optional<std::uint64_t> seed_;
};

// Seeded axis sampler: values u/D, u uniform in {1,...,D*R}, D = 2^20, R = 16,
// distinct, sorted ascending. Identical seeds give identical draws.
class AxisSampler {
  public:
    explicit AxisSampler(std::uint64_t seed);
    std::vector<Rat> sorted_distinct(int count);
    static constexpr long denom = 1L << 20;
    static constexpr long range = 16;

  private:
    std::uint64_t next_u64();
    std::uint64_t state_[4];
};

Grid make_conical(int n, std::uint64_t seed);
Grid make_halfgrid(std::vector<Rat> s1, std::vector<Rat> s2);
Grid make_halfrect(int m, int n);
Grid make_simplex(int n);
Grid make_fullgrid(std::vector<Rat> s1, std::vector<Rat> s2,
                   std::optional<std::uint64_t> seed = std::nullopt);
Grid make_fullgrid_sampled(int n1, int n2, std::uint64_t seed);
Grid make_generic2(int n, std::uint64_t seed);
Grid make_generic3(int n, std::uint64_t seed);
/// 3D half-grid {(s1[i], s2[j], s3[k]) : i+j+k <= n} from explicit axes, each
/// starting at 0 with n+1 entries. Kind is generic3; genericity not implied.
Grid make_halfgrid3(std::vector<Rat> s1, std::vector<Rat> s2, std::vector<Rat> s3);

struct GenericityWitness {
    bool ok = true;
    std::vector<Index> points;  // offending collinear triple / coplanar 4-set
    std::string what;
};

/// True iff no line that is parallel to neither axis contains 3 grid points.
GenericityWitness check_generic2(const Grid& g);

/// 3D genericity per the u.x = 1 family: every axis-aligned slice is generic
/// as a 2D grid (lines missing the slice origin), and no plane with
/// full-support normal that misses the origin contains 4 grid points.
GenericityWitness check_generic3(const Grid& g);

}  // namespace covergrid
