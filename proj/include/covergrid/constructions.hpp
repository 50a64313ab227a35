#pragma once

#include <optional>
#include <string>

#include "covergrid/candidates.hpp"
#include "covergrid/grid.hpp"

namespace covergrid {

/// k copies of every row line y = a_i of a conical grid; covers the whole
/// grid k-fold with nk lines.
Cover rows_cover(const Grid& g, long k);

/// k copies of the diagonals x + y = i, 1 <= i <= n-1, of the equally spaced
/// simplex grid; misses the vertex, covers everything else k-fold.
Cover simplex_cover(const Grid& g, long k);

/// Axis lines x = a_i, y = b_i for 1 <= i <= ceil(n/2) plus one pairing line
/// per leftover boundary pair, all repeated k times. Misses the vertex.
Cover generic2_cover(const Grid& g, long k);

/// The five-type plane family for a 3D generic half-grid of order n; covers
/// every nonzero point at least n times and misses the origin.
Cover generic3_family(const Grid& g);

/// k = q*n + v decomposition: q copies of the five-type family plus v copies
/// of each axis plane x = a_i, y = b_i, z = c_i, 1 <= i <= n.
Cover generic3_cover(const Grid& g, long k);

/// The exact-size missing-point cover of a half-rectangular grid:
/// y = 0..y0-1, x = 0..x0-1, and the diagonals x + y = x0+y0+1 ... .
Cover halfrect_cover(const Grid& g, const Index& p);

/// Construction seeding cov's branch-and-bound when the grid kind and the
/// (k, missing) contract match one of the explicit covers above.
std::optional<Cover> construction_incumbent(const Grid& g, long k,
                                            const std::optional<Index>& missing);

struct ConstructionReport {
    std::string scheme;
    Cover cover;
    Rat claimed;       // size bound claimed for the scheme
    long actual = 0;   // lines/planes used, with multiplicity
    bool verified = false;
    long min_coverage = 0;
    long k = 1;
    std::optional<Index> missing;
};

/// Builds the named scheme ("rows" | "simplex" | "generic2" | "generic3" |
/// "generic3-family" | "halfrect"), verifies it against its contract and
/// compares the actual size with the claimed bound.
ConstructionReport construct_report(const Grid& g, const std::string& scheme, long k,
                                    std::optional<Index> p = std::nullopt);

}  // namespace covergrid
