#include "covergrid/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "covergrid/errors.hpp"

namespace covergrid {

namespace {

json index_to_json(const Index& p, int dim) {
    json a = json::array();
    for (int t = 0; t < dim; ++t) a.push_back(p[t]);
    return a;
}

Index index_from_json(const json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw BadInput("json: point index has wrong arity");
    Index p{0, 0, 0};
    for (int t = 0; t < dim; ++t) {
        if (!j[t].is_number_integer()) throw BadInput("json: point index not integer");
        p[t] = j[t].get<int>();
    }
    return p;
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw BadInput("json: expected a rational as \"p/q\" string");
}

}  // namespace

json grid_to_json(const Grid& g) {
    json j;
    j["dim"] = g.dim();
    j["kind"] = kind_name(g.kind());
    j["order"] = g.order();
    if (g.m()) j["m"] = *g.m();
    json axes = json::array();
    for (const auto& ax : g.axes()) {
        json a = json::array();
        for (const Rat& v : ax) a.push_back(v.str());
        axes.push_back(std::move(a));
    }
    j["axes"] = std::move(axes);
    json pts = json::array();
    for (const Index& p : g.points()) pts.push_back(index_to_json(p, g.dim()));
    j["points"] = std::move(pts);
    if (g.seed()) j["seed"] = *g.seed();
    return j;
}

Grid grid_from_json(const json& j) {
    try {
        if (!j.is_object()) throw BadInput("grid json: not an object");
        int dim = j.at("dim").get<int>();
        GridKind kind = kind_from_name(j.at("kind").get<std::string>());
        int order = j.at("order").get<int>();
        std::optional<int> m;
        if (j.contains("m") && !j["m"].is_null()) m = j["m"].get<int>();
        std::vector<std::vector<Rat>> axes;
        for (const auto& a : j.at("axes")) {
            std::vector<Rat> ax;
            for (const auto& v : a) ax.push_back(rat_from_json(v));
            axes.push_back(std::move(ax));
        }
        std::vector<Index> pts;
        for (const auto& p : j.at("points")) pts.push_back(index_from_json(p, dim));
        std::optional<std::uint64_t> seed;
        if (j.contains("seed") && !j["seed"].is_null())
            seed = j["seed"].get<std::uint64_t>();
        return Grid(dim, kind, order, m, std::move(axes), std::move(pts), seed);
    } catch (const json::exception& e) {
        throw BadInput(std::string("grid json: ") + e.what());
    }
}

std::string grid_hash(const Grid& g) {
    std::string s = grid_to_json(g).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

json cover_to_json(const Cover& c, const Grid& g, bool inline_grid) {
    json j;
    j["grid"] = inline_grid ? grid_to_json(g) : json(grid_hash(g));
    json entries = json::array();
    for (const auto& e : c.entries) {
        json je;
        if (e.plane) {
            json coeffs = json::array();
            for (const auto& v : e.plane->coeffs()) coeffs.push_back(v.get_str());
            je["coeffs"] = std::move(coeffs);
            je["rhs"] = e.plane->rhs().get_str();
        } else {
            je["synthetic"] = "singleton";
            je["point"] = index_to_json(*e.singleton_point, g.dim());
        }
        je["mult"] = e.mult;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j;
}

Cover cover_from_json(const json& j, const Grid& g) {
    try {
        if (j.contains("grid")) {
            const auto& gj = j["grid"];
            if (gj.is_string()) {
                if (gj.get<std::string>() != grid_hash(g))
                    throw BadInput("cover json: grid hash mismatch");
            } else if (gj.is_object()) {
                Grid inlined = grid_from_json(gj);
                if (grid_hash(inlined) != grid_hash(g))
                    throw BadInput("cover json: inline grid differs from the given grid");
            }
        }
        Cover c;
        for (const auto& je : j.at("entries")) {
            CoverEntry e;
            e.mult = je.value("mult", 1L);
            if (e.mult < 0) throw BadInput("cover json: negative multiplicity");
            if (je.contains("synthetic")) {
                if (je["synthetic"].get<std::string>() != "singleton")
                    throw BadInput("cover json: unknown synthetic kind");
                e.singleton_point = index_from_json(je.at("point"), g.dim());
            } else {
                std::vector<mpz_class> coeffs;
                for (const auto& v : je.at("coeffs"))
                    coeffs.emplace_back(v.get<std::string>());
                e.plane = Hyperplane(std::move(coeffs),
                                     mpz_class(je.at("rhs").get<std::string>()));
            }
            c.entries.push_back(std::move(e));
        }
        return c;
    } catch (const json::exception& e) {
        throw BadInput(std::string("cover json: ") + e.what());
    }
}

json cover_report_to_json(const CoverReport& r, const Grid& g, long k) {
    json j;
    j["ok"] = r.ok;
    j["k"] = k;
    j["min_coverage"] = r.min_coverage;
    json v = json::array();
    for (const auto& viol : r.violations) {
        json jv;
        jv["point"] = index_to_json(viol.point, g.dim());
        jv["count"] = viol.count;
        if (viol.missing_hit) {
            jv["kind"] = "missing_covered";
        } else {
            jv["kind"] = "undercovered";
            jv["required"] = viol.required;
        }
        v.push_back(std::move(jv));
    }
    j["violations"] = std::move(v);
    return j;
}

json weighting_to_json(const Weighting& w, const Grid& g) {
    json j;
    if (w.missing) j["missing"] = index_to_json(*w.missing, g.dim());
    json ws = json::array();
    for (const auto& [p, v] : w.weights) {
        json jw;
        jw["point"] = index_to_json(p, g.dim());
        jw["w"] = v.str();
        ws.push_back(std::move(jw));
    }
    j["weights"] = std::move(ws);
    j["objective"] = w.objective().str();
    return j;
}

Weighting weighting_from_json(const json& j, const Grid& g) {
    try {
        Weighting w;
        if (j.contains("missing") && !j["missing"].is_null())
            w.missing = index_from_json(j["missing"], g.dim());
        for (const auto& jw : j.at("weights"))
            w.weights.emplace_back(index_from_json(jw.at("point"), g.dim()),
                                   rat_from_json(jw.at("w")));
        std::sort(w.weights.begin(), w.weights.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return w;
    } catch (const json::exception& e) {
        throw BadInput(std::string("weighting json: ") + e.what());
    }
}

json weighting_report_to_json(const WeightingReport& r, int dim) {
    json j;
    j["ok"] = r.ok;
    j["objective"] = r.objective.str();
    json v = json::array();
    for (const auto& viol : r.violations) {
        json jv;
        jv["kind"] = viol.kind;
        json mem = json::array();
        for (const auto& p : viol.members) mem.push_back(index_to_json(p, dim));
        jv["members"] = std::move(mem);
        jv["weight_sum"] = viol.weight_sum.str();
        v.push_back(std::move(jv));
    }
    j["violations"] = std::move(v);
    return j;
}

json construction_report_to_json(const ConstructionReport& r, const Grid& g) {
    json j;
    j["scheme"] = r.scheme;
    j["k"] = r.k;
    if (r.missing) j["missing"] = index_to_json(*r.missing, g.dim());
    j["claimed_bound"] = r.claimed.str();
    j["actual_size"] = r.actual;
    j["verified"] = r.verified;
    j["min_coverage"] = r.min_coverage;
    j["cover"] = cover_to_json(r.cover, g, /*inline_grid=*/false);
    return j;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string bound_table_csv(const std::vector<BoundResult>& rows) {
    std::ostringstream os;
    os << "method,value,exact,params,note\n";
    for (const auto& r : rows) {
        std::string value = r.exact ? r.exact_value.str() : [&] {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.12g", r.approx);
            return std::string(buf);
        }();
        os << csv_field(r.method) << "," << value << ","
           << (r.exact ? "true" : "false") << "," << csv_field(r.params) << ","
           << csv_field(r.note) << "\n";
    }
    return os.str();
}

json solve_result_to_json(const CovResult& r, const Rat& lp_value,
                          const Weighting& w, const Grid& g) {
    json j;
    j["value"] = r.value;
    j["lp_value"] = lp_value.str();
    j["cover"] = cover_to_json(r.cover, g, /*inline_grid=*/false);
    j["weighting"] = weighting_to_json(w, g);
    j["stats"] = {{"nodes", r.stats.nodes},
                  {"pivots", r.stats.lp_pivots},
                  {"lp_solves", r.stats.lp_solves},
                  {"candidates", r.stats.candidates}};
    return j;
}

}  // namespace covergrid
