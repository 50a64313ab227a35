#pragma once

#include <optional>
#include <vector>

#include "covergrid/grid.hpp"
#include "covergrid/incidence.hpp"

namespace covergrid {

/// One column of the covering program: the set of grid points incident to an
/// admissible hyperplane. Spanned candidates carry their hyperplane; line-set
/// (3D) and singleton candidates are synthetic — a realizing hyperplane is
/// materialized on demand by realize_candidate.
struct CoveringSet {
    enum class Tag { spanned, line_set, singleton };
    Tag tag = Tag::spanned;
    std::optional<Hyperplane> plane;  // set iff tag == spanned
    std::vector<int> members;         // positions into grid.points(), sorted
};

struct CandidateOptions {
    /// Restrict columns to hyperplanes through >= 2 grid points, the line-only
    /// column family (no singleton columns).
    bool paper_literal = false;
};

std::vector<CoveringSet> enumerate_candidates2(const Grid& g, std::optional<Index> missing,
                                               const CandidateOptions& = {});
std::vector<CoveringSet> enumerate_candidates3(const Grid& g, std::optional<Index> missing,
                                               const CandidateOptions& = {});
std::vector<CoveringSet> enumerate_candidates(const Grid& g, std::optional<Index> missing,
                                              const CandidateOptions& = {});

/// Concrete hyperplane realizing a candidate: incident to exactly the
/// candidate's members among grid points and avoiding `missing`.
Hyperplane realize_candidate(const Grid& g, const CoveringSet& c,
                             std::optional<Index> missing);

/// Multiset of hyperplanes with multiplicities. Entries are either concrete
/// hyperplanes or synthetic singletons (a line/plane through one named grid
/// point and nothing else).
struct CoverEntry {
    std::optional<Hyperplane> plane;
    std::optional<Index> singleton_point;
    long mult = 1;
};

struct Cover {
    std::vector<CoverEntry> entries;
    long total() const;
};

struct CoverViolation {
    Index point{};
    long count = 0;
    long required = 0;
    bool missing_hit = false;  // the designated missing point was covered
};

struct CoverReport {
    bool ok = false;
    long min_coverage = 0;            // over grid minus missing
    std::vector<long> counts;         // per grid point position
    std::vector<CoverViolation> violations;
};

CoverReport verify_cover(const Grid& g, const Cover& c, long k,
                         std::optional<Index> missing);

}  // namespace covergrid
