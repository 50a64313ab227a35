// covergrid CLI: exact hyperplane-covering toolkit for grid-like point sets.
//
// Subcommands: gen, solve, construct, certify, bound, verify,
// experiment acceptance. Exit codes: 0 success, 1 verification or acceptance
// failure, 2 infeasible/budget exhausted, 3 bad input.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "covergrid/acceptance.hpp"
#include "covergrid/certificates.hpp"
#include "covergrid/lp.hpp"
#include "covergrid/constructions.hpp"
#include "covergrid/cover_solver.hpp"
#include "covergrid/errors.hpp"
#include "covergrid/grid.hpp"
#include "covergrid/json_io.hpp"

namespace cg = covergrid;
using cg::BadInput;
using cg::Grid;
using cg::Index;
using cg::json;

namespace {

void write_atomic(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw BadInput("cannot open output file: " + tmp);
        os << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw BadInput("cannot move output into place: " + path);
}

json read_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw BadInput("cannot open file: " + path);
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        throw BadInput("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

Grid load_grid(const std::string& path) { return cg::grid_from_json(read_json_file(path)); }

// missing spec: "none", "vertex", or comma-separated indices "i,j[,k]"
std::optional<Index> parse_missing(const std::string& spec, const Grid& g) {
    if (spec == "none") return std::nullopt;
    if (spec == "vertex" || spec.empty()) {
        auto v = g.vertex();
        if (!v) throw BadInput("grid has no vertex point (index 0,...,0)");
        return v;
    }
    Index p{0, 0, 0};
    std::istringstream is(spec);
    std::string tok;
    int t = 0;
    while (std::getline(is, tok, ',')) {
        if (t >= g.dim()) throw BadInput("missing spec has too many indices");
        try {
            p[t++] = std::stoi(tok);
        } catch (...) {
            throw BadInput("bad missing spec '" + spec + "'");
        }
    }
    if (t != g.dim()) throw BadInput("missing spec has too few indices");
    if (!g.contains(p)) throw BadInput("missing point is not in the grid");
    return p;
}

// These families conventionally miss the vertex unless told otherwise.
std::optional<Index> default_missing(const Grid& g) {
    switch (g.kind()) {
        case cg::GridKind::simplex:
        case cg::GridKind::generic2:
        case cg::GridKind::generic3:
            return g.vertex();
        default:
            return std::nullopt;
    }
}

long env_node_budget() {
    if (const char* s = std::getenv("COVERGRID_NODE_BUDGET")) {
        try {
            return std::stol(s);
        } catch (...) {
            throw BadInput("COVERGRID_NODE_BUDGET is not a number");
        }
    }
    return 1'000'000;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hyperplane covering toolkit for grid-like point sets"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a grid and emit its JSON");
    std::string gen_kind = "generic2", gen_out;
    int gen_n = 4, gen_m = 0;
    std::uint64_t gen_seed = 1;
    gen->add_option("--kind", gen_kind,
                    "conical|halfgrid|halfrect|simplex|generic2|generic3|fullgrid");
    gen->add_option("--n", gen_n, "order (columns for halfrect/fullgrid)");
    gen->add_option("--m", gen_m, "rows for halfgrid/halfrect/fullgrid (default n)");
    gen->add_option("--seed", gen_seed, "sampler seed");
    gen->add_option("--out", gen_out, "output path ('-' = stdout)");

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "compute cov (ILP) and cov_lp");
    std::string solve_grid, solve_missing, solve_out, solve_emit_lp;
    long solve_k = 1;
    bool solve_lp_only = false, solve_paper_literal = false;
    long solve_budget = -1;
    solve->add_option("--grid", solve_grid, "grid JSON file")->required();
    solve->add_option("--k", solve_k, "covering multiplicity");
    solve->add_option("--missing", solve_missing, "none | vertex | i,j[,k]");
    solve->add_flag("--lp-only", solve_lp_only, "solve the LP relaxation only");
    solve->add_flag("--paper-literal-candidates", solve_paper_literal,
                    "restrict columns to hyperplanes through >= 2 points");
    solve->add_option("--node-budget", solve_budget, "branch-and-bound node budget");
    solve->add_option("--emit-lp", solve_emit_lp,
                      "also write the covering program in plain text");
    solve->add_option("--out", solve_out, "output path");

    // ---- construct ----
    auto* con = app.add_subcommand("construct", "build an explicit covering construction and verify");
    std::string con_grid, con_scheme, con_point, con_out;
    long con_k = 1;
    con->add_option("--grid", con_grid, "grid JSON file")->required();
    con->add_option("--scheme", con_scheme,
                    "rows|simplex|generic2|generic3|generic3-family|halfrect")
        ->required();
    con->add_option("--k", con_k, "covering multiplicity");
    con->add_option("--point", con_point, "missing point i,j for halfrect");
    con->add_option("--out", con_out, "output path");

    // ---- certify ----
    auto* cert = app.add_subcommand("certify", "emit a dual weighting and check it");
    std::string cert_grid, cert_out;
    long cert_k = 1;
    bool cert_literal = false;
    cert->add_option("--grid", cert_grid, "grid JSON file")->required();
    cert->add_option("--k", cert_k, "covering multiplicity");
    cert->add_flag("--literal-weighting", cert_literal,
                   "use the literal face reading (demonstrates infeasibility)");
    cert->add_option("--out", cert_out, "output path");

    // ---- bound ----
    auto* bound = app.add_subcommand("bound", "tabulate every applicable bound");
    std::string bound_grid, bound_out, bound_format = "csv";
    long bound_k = 1;
    bool bound_with_ilp = false;
    bound->add_option("--grid", bound_grid, "grid JSON file")->required();
    bound->add_option("--k", bound_k, "covering multiplicity");
    bound->add_flag("--with-ilp", bound_with_ilp, "also solve the exact ILP");
    bound->add_option("--format", bound_format, "csv|json");
    bound->add_option("--out", bound_out, "output path");

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "check a cover file against a grid");
    std::string ver_grid, ver_cover, ver_missing, ver_out;
    long ver_k = 1;
    ver->add_option("--grid", ver_grid, "grid JSON file")->required();
    ver->add_option("--cover", ver_cover, "cover JSON file")->required();
    ver->add_option("--k", ver_k, "covering multiplicity");
    ver->add_option("--missing", ver_missing, "none | vertex | i,j[,k]");
    ver->add_option("--out", ver_out, "output path");

    // ---- experiment ----
    auto* exp = app.add_subcommand("experiment", "reproducible experiment runner");
    auto* acc = exp->add_subcommand("acceptance", "run the acceptance suite, emit CSV");
    std::string acc_out = "acceptance.csv";
    bool acc_quiet = false;
    acc->add_option("--out", acc_out, "CSV output path");
    acc->add_flag("--quiet", acc_quiet, "suppress progress notes");
    exp->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (gen->parsed()) {
            int m = gen_m > 0 ? gen_m : gen_n;
            std::optional<Grid> g;
            if (gen_kind == "conical") g = cg::make_conical(gen_n, gen_seed);
            else if (gen_kind == "halfrect") g = cg::make_halfrect(m, gen_n);
            else if (gen_kind == "simplex") g = cg::make_simplex(gen_n);
            else if (gen_kind == "generic2") g = cg::make_generic2(gen_n, gen_seed);
            else if (gen_kind == "generic3") g = cg::make_generic3(gen_n, gen_seed);
            else if (gen_kind == "fullgrid") g = cg::make_fullgrid_sampled(gen_n, m, gen_seed);
            else if (gen_kind == "halfgrid") {
                cg::AxisSampler s(gen_seed);
                auto s1 = s.sorted_distinct(gen_n);
                auto s2 = s.sorted_distinct(m);
                g = cg::make_halfgrid(std::move(s1), std::move(s2));
            } else {
                throw BadInput("unknown kind '" + gen_kind + "'");
            }
            write_atomic(gen_out, cg::grid_to_json(*g).dump(2) + "\n");
            return 0;
        }

        if (solve->parsed()) {
            Grid g = load_grid(solve_grid);
            std::optional<Index> missing = solve_missing.empty()
                                               ? default_missing(g)
                                               : parse_missing(solve_missing, g);
            cg::CovOptions opt;
            opt.candidates.paper_literal = solve_paper_literal;
            opt.node_budget = solve_budget > 0 ? solve_budget : env_node_budget();
            if (!solve_emit_lp.empty()) {
                cg::CoverProblem cp =
                    cg::build_cover_problem(g, solve_k, missing, opt.candidates);
                write_atomic(solve_emit_lp, cg::lp_to_text(cp.lp));
            }
            cg::CovLpResult lp = cg::cov_lp(g, solve_k, missing, opt);
            if (solve_lp_only) {
                json j;
                j["lp_value"] = lp.value.str();
                j["weighting"] = cg::weighting_to_json(lp.weighting, g);
                j["stats"] = {{"pivots", lp.stats.lp_pivots},
                              {"candidates", lp.stats.candidates}};
                write_atomic(solve_out, j.dump(2) + "\n");
                return 0;
            }
            cg::CovResult r = cg::cov(g, solve_k, missing, opt);
            json j = cg::solve_result_to_json(r, lp.value, lp.weighting, g);
            write_atomic(solve_out, j.dump(2) + "\n");
            return 0;
        }

        if (con->parsed()) {
            Grid g = load_grid(con_grid);
            std::optional<Index> p;
            if (!con_point.empty()) p = parse_missing(con_point, g);
            cg::ConstructionReport rep = cg::construct_report(g, con_scheme, con_k, p);
            write_atomic(con_out, cg::construction_report_to_json(rep, g).dump(2) + "\n");
            return rep.verified ? 0 : 1;
        }

        if (cert->parsed()) {
            Grid g = load_grid(cert_grid);
            cg::Weighting wt;
            if (g.kind() == cg::GridKind::generic2) {
                if (cert_literal)
                    throw BadInput("--literal-weighting applies to generic3 grids");
                wt = cg::weighting_generic2(g, cert_k);
            } else if (g.kind() == cg::GridKind::generic3) {
                wt = cg::weighting_generic3(g, cert_k, cert_literal);
            } else {
                throw BadInput("certify: weightings exist for generic2/generic3 grids");
            }
            cg::WeightingReport rep = cg::check_weighting(g, wt, cert_k);
            json j;
            j["weighting"] = cg::weighting_to_json(wt, g);
            j["feasibility"] = cg::weighting_report_to_json(rep, g.dim());
            write_atomic(cert_out, j.dump(2) + "\n");
            return rep.ok ? 0 : 1;
        }

        if (bound->parsed()) {
            Grid g = load_grid(bound_grid);
            cg::BoundReportOptions opt;
            if (bound_with_ilp) {
                cg::CovOptions copt;
                copt.node_budget = env_node_budget();
                opt.ilp_value = cg::cov(g, bound_k, default_missing(g), copt).value;
            }
            auto rows = cg::bound_report(g, bound_k, opt);
            if (bound_format == "csv") {
                write_atomic(bound_out, cg::bound_table_csv(rows));
            } else if (bound_format == "json") {
                json arr = json::array();
                for (const auto& r : rows) {
                    json jr;
                    jr["method"] = r.method;
                    jr["exact"] = r.exact;
                    if (r.exact) jr["value"] = r.exact_value.str();
                    else jr["value"] = r.approx;
                    jr["params"] = r.params;
                    jr["note"] = r.note;
                    arr.push_back(std::move(jr));
                }
                write_atomic(bound_out, arr.dump(2) + "\n");
            } else {
                throw BadInput("unknown format '" + bound_format + "'");
            }
            return 0;
        }

        if (ver->parsed()) {
            Grid g = load_grid(ver_grid);
            cg::Cover c = cg::cover_from_json(read_json_file(ver_cover), g);
            std::optional<Index> missing = ver_missing.empty()
                                               ? default_missing(g)
                                               : parse_missing(ver_missing, g);
            cg::CoverReport rep = cg::verify_cover(g, c, ver_k, missing);
            write_atomic(ver_out, cg::cover_report_to_json(rep, g, ver_k).dump(2) + "\n");
            return rep.ok ? 0 : 1;
        }

        if (acc->parsed()) {
            std::ostream* log = acc_quiet ? nullptr : &std::cerr;
            cg::AcceptanceResult first = cg::run_acceptance(log);
            cg::AcceptanceResult second = cg::run_acceptance(nullptr);
            bool deterministic = first.csv == second.csv;
            std::string csv = first.csv;
            csv += "9,csv_determinism," +
                   std::string(deterministic ? "identical" : "different") +
                   ",identical," + (deterministic ? "pass" : "FAIL") + "\n";
            write_atomic(acc_out, csv);
            for (const auto& c : first.criteria)
                std::cout << "criterion " << c.id << " (" << c.name
                          << "): " << (c.pass ? "PASS" : "FAIL") << "\n";
            std::cout << "criterion 9 (determinism): "
                      << (deterministic ? "PASS" : "FAIL") << "\n";
            bool all = first.all_pass && deterministic;
            std::cout << "acceptance: " << (all ? "PASS" : "FAIL") << "\n";
            return all ? 0 : 1;
        }
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cg::ResourceLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cg::InternalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
