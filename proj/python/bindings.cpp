// Python bindings: complexes, Betti tables, lattice complements and the
// witness constructions. Results come back as plain dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "facetbetti/commands.hpp"
#include "facetbetti/complexops.hpp"
#include "facetbetti/lattice.hpp"

namespace py = pybind11;
using namespace facetbetti;

namespace {

py::object to_python(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& x : j) out.append(to_python(x));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = to_python(it.value());
            return out;
        }
        default: return py::none();
    }
}

VertexSet subset(const SimplicialComplex& c, const std::vector<std::string>& names) {
    return c.universe()->parse_set(names);
}

std::vector<std::string> names(const SimplicialComplex& c, VertexSet s) { return c.universe()->names_of(s); }

BettiTable table_for(const SimplicialComplex& c, const std::string& backend, const std::string& field,
                     std::size_t max_faces) {
    return compute_betti(c, backend, Field::parse(field), max_faces);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Betti numbers, lcm-lattice complements and complement witnesses for facet ideals";

    auto base = py::register_exception<Error>(m, "FacetBettiError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<UniverseMismatch>(m, "UniverseMismatch", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", base.ptr());

    py::class_<SimplicialComplex>(m, "Complex")
        .def(py::init([](const std::vector<std::vector<std::string>>& facets) {
                 return SimplicialComplex::from_names(facets);
             }),
             py::arg("facets"))
        .def_property_readonly("vertices", [](const SimplicialComplex& c) { return names(c, c.ground()); })
        .def_property_readonly("facets",
                               [](const SimplicialComplex& c) {
                                   std::vector<std::vector<std::string>> out;
                                   for (VertexSet f : c.facets()) out.push_back(names(c, f));
                                   return out;
                               })
        .def("is_forest", [](const SimplicialComplex& c) { return is_forest(c).forest; })
        .def("leaves",
             [](const SimplicialComplex& c) {
                 std::vector<std::vector<std::string>> out;
                 for (const auto& cert : find_leaves(c)) out.push_back(names(c, cert.leaf));
                 return out;
             })
        .def("induced", [](const SimplicialComplex& c, const std::vector<std::string>& u) {
            return induced_subcollection(c, subset(c, u));
        })
        .def("localization", [](const SimplicialComplex& c, const std::vector<std::string>& f) {
            return localization(c, subset(c, f));
        })
        .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
        .def("__len__", &SimplicialComplex::facet_count)
        .def("__str__", &SimplicialComplex::to_string)
        .def("__repr__", [](const SimplicialComplex& c) { return "Complex(" + c.to_string() + ")"; });

    m.def("parse_complex", [](const std::string& text) { return parse_complex(text).complex; }, py::arg("text"),
          "Parse facet-list text: one facet per line, '#' comments.");
    m.def("format_complex", &format_complex, py::arg("complex"));

    m.def(
        "betti",
        [](const SimplicialComplex& c, const std::string& backend, const std::string& field, std::size_t max_faces) {
            return to_python(betti_to_json(table_for(c, backend, field, max_faces)));
        },
        py::arg("complex"), py::arg("backend") = "auto", py::arg("field") = "GF2",
        py::arg("max_faces") = kDefaultMaxFaces,
        "Betti table of S/I as a dict: graded matrix, multigraded entries, pd, t_vector.");

    m.def(
        "top_degree_betti",
        [](const SimplicialComplex& c, int i) {
            const auto r = top_degree_betti(c, i);
            return py::make_tuple(r.value, r.used_oracle);
        },
        py::arg("complex"), py::arg("i"), "(beta_{i,n}, whether the Hochster oracle was needed)");

    m.def(
        "complements",
        [](const SimplicialComplex& c, const std::vector<std::string>& monomial) {
            const auto ideal = facet_ideal(c);
            const LcmLattice lattice(ideal);
            std::vector<std::vector<std::string>> out;
            for (VertexSet other : complements_of(lattice, ideal, subset(c, monomial))) out.push_back(names(c, other));
            return out;
        },
        py::arg("complex"), py::arg("monomial"));

    m.def(
        "witness_facet_complement",
        [](const SimplicialComplex& c, const std::vector<std::string>& facet, int i) {
            const auto r = witness_facet_complement(c, subset(c, facet), i);
            py::dict out;
            out["u"] = names(c, r.u);
            out["beta"] = r.beta;
            out["verified_beta"] = verify_facet_complement(c, subset(c, facet), r.u, i);
            out["trace"] = format_trace(c.universe(), r.trace);
            return out;
        },
        py::arg("complex"), py::arg("facet"), py::arg("i"));

    m.def(
        "witness_pair",
        [](const SimplicialComplex& c, int a, int b) {
            const auto pair = witness_pair(c, a, b);
            auto out = witness_to_json(c.universe(), pair);
            out["verified"] = verify_witness(c, pair).ok();
            return to_python(out);
        },
        py::arg("complex"), py::arg("a"), py::arg("b"));

    m.def(
        "subadditivity",
        [](const SimplicialComplex& c, const std::string& backend, const std::string& field) {
            const auto report = check_subadditivity(table_for(c, backend, field, kDefaultMaxFaces));
            py::list rows;
            for (const auto& r : report.rows) {
                py::dict row;
                row["a"] = r.a;
                row["b"] = r.b;
                row["t_a"] = r.t_a;
                row["t_b"] = r.t_b;
                row["t_a_plus_b"] = r.t_ab;
                row["holds"] = r.holds;
                rows.append(row);
            }
            py::dict out;
            out["holds"] = report.holds;
            out["rows"] = rows;
            return out;
        },
        py::arg("complex"), py::arg("backend") = "auto", py::arg("field") = "GF2");

    m.def(
        "question_search",
        [](const SimplicialComplex& c, int a, int b, const std::string& field) {
            const auto r = question_main_search(facet_ideal(c), a, b, Field::parse(field));
            py::list pairs;
            for (const auto& [x, y] : r.pairs) pairs.append(py::make_tuple(names(c, x), names(c, y)));
            py::dict out;
            out["status"] = to_string(r.status);
            out["top_beta"] = r.top_beta;
            out["pairs"] = pairs;
            out["message"] = r.message;
            return out;
        },
        py::arg("complex"), py::arg("a"), py::arg("b"), py::arg("field") = "Q");
}
