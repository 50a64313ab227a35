// Python bindings for the covergrid core: grid generators, genericity
// checks, exact covering solves, constructions and certificates. Exact
// rationals cross the boundary as "p/q" strings; structured results cross as
// plain dicts mirroring the JSON schemas.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "covergrid/acceptance.hpp"
#include "covergrid/certificates.hpp"
#include "covergrid/constructions.hpp"
#include "covergrid/cover_solver.hpp"
#include "covergrid/errors.hpp"
#include "covergrid/grid.hpp"
#include "covergrid/json_io.hpp"

namespace py = pybind11;
namespace cg = covergrid;
using cg::Grid;
using cg::Index;
using cg::json;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long long>());
        case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(json_to_py(v));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        json arr = json::array();
        for (const auto& v : obj) arr.push_back(py_to_json(v));
        return arr;
    }
    if (py::isinstance<py::dict>(obj)) {
        json o = json::object();
        for (const auto& kv : obj.cast<py::dict>())
            o[kv.first.cast<std::string>()] = py_to_json(kv.second);
        return o;
    }
    throw cg::BadInput("unsupported python value in JSON conversion");
}

std::vector<cg::Rat> axis_from_py(const py::sequence& seq) {
    std::vector<cg::Rat> out;
    for (const auto& v : seq) {
        if (py::isinstance<py::int_>(v)) out.emplace_back(v.cast<long long>());
        else out.push_back(cg::Rat::parse(v.cast<std::string>()));
    }
    return out;
}

std::optional<Index> missing_from_py(const Grid& g, const py::object& spec) {
    if (spec.is_none()) return std::nullopt;
    if (py::isinstance<py::str>(spec)) {
        std::string s = spec.cast<std::string>();
        if (s == "none") return std::nullopt;
        if (s == "vertex") {
            auto v = g.vertex();
            if (!v) throw cg::BadInput("grid has no vertex point");
            return v;
        }
        throw cg::BadInput("missing must be None, 'vertex', 'none' or an index tuple");
    }
    auto t = spec.cast<std::vector<int>>();
    if (static_cast<int>(t.size()) != g.dim())
        throw cg::BadInput("missing index has wrong arity");
    Index p{0, 0, 0};
    for (int i = 0; i < g.dim(); ++i) p[i] = t[i];
    if (!g.contains(p)) throw cg::BadInput("missing point not in grid");
    return p;
}

py::object point_to_py(const Index& p, int dim) {
    py::tuple t(dim);
    for (int i = 0; i < dim; ++i) t[i] = p[i];
    return t;
}

}  // namespace

PYBIND11_MODULE(covergrid, m) {
    m.doc() = "exact hyperplane covering toolkit for grid-like point sets";

    py::register_exception<cg::BadInput>(m, "BadInput", PyExc_ValueError);
    py::register_exception<cg::ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);
    py::register_exception<cg::InternalError>(m, "InternalError", PyExc_RuntimeError);

    py::class_<Grid>(m, "Grid")
        .def_property_readonly("dim", &Grid::dim)
        .def_property_readonly("kind", [](const Grid& g) { return kind_name(g.kind()); })
        .def_property_readonly("order", &Grid::order)
        .def_property_readonly("size", &Grid::size)
        .def_property_readonly("seed", [](const Grid& g) -> py::object {
            if (g.seed()) return py::int_(*g.seed());
            return py::none();
        })
        .def("points",
             [](const Grid& g) {
                 py::list out;
                 for (const Index& p : g.points()) out.append(point_to_py(p, g.dim()));
                 return out;
             })
        .def("axes",
             [](const Grid& g) {
                 py::list out;
                 for (const auto& ax : g.axes()) {
                     py::list a;
                     for (const auto& v : ax) a.append(v.str());
                     out.append(a);
                 }
                 return out;
             })
        .def("vertex",
             [](const Grid& g) -> py::object {
                 if (auto v = g.vertex()) return point_to_py(*v, g.dim());
                 return py::none();
             })
        .def("to_json", [](const Grid& g) { return json_to_py(cg::grid_to_json(g)); })
        .def("hash", [](const Grid& g) { return cg::grid_hash(g); })
        .def("__repr__", [](const Grid& g) {
            return "<covergrid.Grid kind=" + kind_name(g.kind()) +
                   " order=" + std::to_string(g.order()) +
                   " points=" + std::to_string(g.size()) + ">";
        });

    m.def("make_conical", &cg::make_conical, py::arg("n"), py::arg("seed"));
    m.def("make_halfrect", &cg::make_halfrect, py::arg("m"), py::arg("n"));
    m.def("make_simplex", &cg::make_simplex, py::arg("n"));
    m.def("make_generic2", &cg::make_generic2, py::arg("n"), py::arg("seed"));
    m.def("make_generic3", &cg::make_generic3, py::arg("n"), py::arg("seed"));
    m.def(
        "make_halfgrid",
        [](const py::sequence& s1, const py::sequence& s2) {
            return cg::make_halfgrid(axis_from_py(s1), axis_from_py(s2));
        },
        py::arg("s1"), py::arg("s2"));
    m.def(
        "make_fullgrid",
        [](const py::sequence& s1, const py::sequence& s2) {
            return cg::make_fullgrid(axis_from_py(s1), axis_from_py(s2));
        },
        py::arg("s1"), py::arg("s2"));
    m.def("make_fullgrid_sampled", &cg::make_fullgrid_sampled, py::arg("n1"),
          py::arg("n2"), py::arg("seed"));
    m.def(
        "make_halfgrid3",
        [](const py::sequence& s1, const py::sequence& s2, const py::sequence& s3) {
            return cg::make_halfgrid3(axis_from_py(s1), axis_from_py(s2),
                                      axis_from_py(s3));
        },
        py::arg("s1"), py::arg("s2"), py::arg("s3"));

    m.def("grid_from_json",
          [](const py::dict& j) { return cg::grid_from_json(py_to_json(j)); });

    m.def("check_generic2", [](const Grid& g) {
        auto w = cg::check_generic2(g);
        py::list pts;
        for (const auto& p : w.points) pts.append(point_to_py(p, g.dim()));
        return py::make_tuple(w.ok, pts);
    });
    m.def("check_generic3", [](const Grid& g) {
        auto w = cg::check_generic3(g);
        py::list pts;
        for (const auto& p : w.points) pts.append(point_to_py(p, g.dim()));
        return py::make_tuple(w.ok, pts);
    });

    m.def(
        "cov",
        [](const Grid& g, long k, const py::object& missing, bool paper_literal,
           long node_budget) {
            cg::CovOptions opt;
            opt.candidates.paper_literal = paper_literal;
            opt.node_budget = node_budget;
            cg::CovResult r = cg::cov(g, k, missing_from_py(g, missing), opt);
            py::dict out;
            out["value"] = r.value;
            out["cover"] = json_to_py(cg::cover_to_json(r.cover, g, false));
            out["stats"] = py::dict(
                py::arg("nodes") = r.stats.nodes, py::arg("pivots") = r.stats.lp_pivots,
                py::arg("lp_solves") = r.stats.lp_solves,
                py::arg("candidates") = r.stats.candidates);
            return out;
        },
        py::arg("grid"), py::arg("k") = 1, py::arg("missing") = py::none(),
        py::arg("paper_literal") = false, py::arg("node_budget") = 1000000L);

    m.def(
        "cov_lp",
        [](const Grid& g, long k, const py::object& missing) {
            cg::CovLpResult r = cg::cov_lp(g, k, missing_from_py(g, missing));
            py::dict out;
            out["lp_value"] = r.value.str();
            out["weighting"] = json_to_py(cg::weighting_to_json(r.weighting, g));
            return out;
        },
        py::arg("grid"), py::arg("k") = 1, py::arg("missing") = py::none());

    m.def(
        "verify_cover",
        [](const Grid& g, const py::dict& cover, long k, const py::object& missing) {
            cg::Cover c = cg::cover_from_json(py_to_json(cover), g);
            cg::CoverReport rep = cg::verify_cover(g, c, k, missing_from_py(g, missing));
            return json_to_py(cg::cover_report_to_json(rep, g, k));
        },
        py::arg("grid"), py::arg("cover"), py::arg("k") = 1,
        py::arg("missing") = py::none());

    m.def(
        "construct",
        [](const Grid& g, const std::string& scheme, long k, const py::object& point) {
            std::optional<Index> p;
            if (!point.is_none()) p = missing_from_py(g, point);
            cg::ConstructionReport rep = cg::construct_report(g, scheme, k, p);
            return json_to_py(cg::construction_report_to_json(rep, g));
        },
        py::arg("grid"), py::arg("scheme"), py::arg("k") = 1,
        py::arg("point") = py::none());

    m.def(
        "certify",
        [](const Grid& g, long k, bool literal) {
            cg::Weighting wt = g.kind() == cg::GridKind::generic3
                                   ? cg::weighting_generic3(g, k, literal)
                                   : cg::weighting_generic2(g, k);
            cg::WeightingReport rep = cg::check_weighting(g, wt, k);
            py::dict out;
            out["weighting"] = json_to_py(cg::weighting_to_json(wt, g));
            out["feasibility"] = json_to_py(cg::weighting_report_to_json(rep, g.dim()));
            return out;
        },
        py::arg("grid"), py::arg("k") = 1, py::arg("literal") = false);

    m.def(
        "check_weighting",
        [](const Grid& g, const py::dict& weighting, long k) {
            cg::Weighting wt = cg::weighting_from_json(py_to_json(weighting), g);
            return json_to_py(
                cg::weighting_report_to_json(cg::check_weighting(g, wt, k), g.dim()));
        },
        py::arg("grid"), py::arg("weighting"), py::arg("k") = 1);

    m.def(
        "bound_report",
        [](const Grid& g, long k, bool with_ilp) {
            cg::BoundReportOptions opt;
            if (with_ilp) {
                std::optional<Index> missing;
                if (g.kind() == cg::GridKind::simplex ||
                    g.kind() == cg::GridKind::generic2 ||
                    g.kind() == cg::GridKind::generic3)
                    missing = g.vertex();
                opt.ilp_value = cg::cov(g, k, missing).value;
            }
            auto rows = cg::bound_report(g, k, opt);
            py::list out;
            for (const auto& r : rows) {
                py::dict d;
                d["method"] = r.method;
                d["exact"] = r.exact;
                if (r.exact) d["value"] = r.exact_value.str();
                else d["value"] = r.approx;
                d["params"] = r.params;
                d["note"] = r.note;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("grid"), py::arg("k") = 1, py::arg("with_ilp") = false);

    m.def("lemma_bound",
          [](const std::vector<long>& betas, long k, long l0, int t) {
              return cg::lemma_bound(betas, k, l0, t).str();
          });
    m.def("lemma_opt_bound", [](const std::vector<long>& betas, long k) {
        return cg::lemma_opt_bound(betas, k).str();
    });
    m.def("row_profile", &cg::row_profile, py::arg("grid"));
    m.def("conical_closed_form", &cg::conical_closed_form, py::arg("n"), py::arg("k"));
    m.def("halfgrid_profile", &cg::halfgrid_profile, py::arg("m"), py::arg("n"));
    m.def("halfgrid_closed_form", &cg::halfgrid_closed_form, py::arg("m"), py::arg("n"),
          py::arg("k"));
}
