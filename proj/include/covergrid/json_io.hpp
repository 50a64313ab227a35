#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "covergrid/candidates.hpp"
#include "covergrid/certificates.hpp"
#include "covergrid/constructions.hpp"
#include "covergrid/cover_solver.hpp"
#include "covergrid/grid.hpp"

namespace covergrid {

using json = nlohmann::json;

json grid_to_json(const Grid& g);
Grid grid_from_json(const json& j);  // throws BadInput on malformed data

/// Stable content hash (FNV-1a over the canonical serialization), hex string.
std::string grid_hash(const Grid& g);

json cover_to_json(const Cover& c, const Grid& g, bool inline_grid = true);
/// Reads a cover; when the file stores a grid hash instead of an inline
/// grid, the hash must match the supplied grid.
Cover cover_from_json(const json& j, const Grid& g);

json cover_report_to_json(const CoverReport& r, const Grid& g, long k);

json weighting_to_json(const Weighting& w, const Grid& g);
Weighting weighting_from_json(const json& j, const Grid& g);

json weighting_report_to_json(const WeightingReport& r, int dim);

json construction_report_to_json(const ConstructionReport& r, const Grid& g);

std::string bound_table_csv(const std::vector<BoundResult>& rows);

json solve_result_to_json(const CovResult& r, const Rat& lp_value,
                          const Weighting& w, const Grid& g);

}  // namespace covergrid
