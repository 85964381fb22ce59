#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "stratindex/catalog.hpp"
#include "stratindex/index_calculus.hpp"
#include "stratindex/milnor.hpp"
#include "stratindex/plmorse.hpp"

namespace py = pybind11;
using namespace stratindex;

namespace {

using PyIncidence = std::map<std::pair<std::string, std::string>, std::int64_t>;
using PyHeights = std::map<VertexId, std::variant<std::int64_t, std::string>>;

IncidenceTable table_from_py(const StratumPoset& poset, const PyIncidence& entries) {
    IncidenceTable t = IncidenceTable::identity(poset);
    for (const auto& [key, value] : entries)
        t.set(poset.index_of(key.first), poset.index_of(key.second), value);
    return t;
}

PyIncidence table_to_py(const StratumPoset& poset, const IncidenceTable& t) {
    PyIncidence out;
    for (const auto& [key, value] : t.entries())
        out[{poset.stratum(key.first).id, poset.stratum(key.second).id}] = value;
    return out;
}

HeightAssignment heights_from_py(const PyHeights& h) {
    HeightAssignment out;
    for (const auto& [v, value] : h) {
        if (std::holds_alternative<std::int64_t>(value))
            out.height[v] = Rational(static_cast<long>(std::get<std::int64_t>(value)));
        else
            out.height[v] = parse_rational(std::get<std::string>(value));
    }
    return out;
}

IndexVector vector_from_py(const std::map<std::string, std::int64_t>& values,
                           IndexKind kind) {
    IndexVector v;
    v.kind = kind;
    v.values = values;
    return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact index calculus for 1-forms on stratified spaces";
    m.attr("__version__") = "0.1.0";

    py::register_exception<StructuralError>(m, "StructuralError");
    py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<OverflowError>(m, "Overflow64Error");
    py::register_exception<NonIsolatedError>(m, "NonIsolatedError");

    py::class_<StratumPoset>(m, "StratumPoset")
        .def(py::init([](const std::vector<std::pair<std::string, int>>& strata,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
                 std::vector<Stratum> ss;
                 for (const auto& [id, dim] : strata) ss.push_back({id, dim});
                 return StratumPoset::from_covers(std::move(ss), covers);
             }),
             py::arg("strata"), py::arg("covers"))
        .def("__len__", &StratumPoset::size)
        .def("ids",
             [](const StratumPoset& p) {
                 std::vector<std::string> out;
                 for (const auto& s : p.strata()) out.push_back(s.id);
                 return out;
             })
        .def("dim",
             [](const StratumPoset& p, const std::string& id) {
                 return p.stratum(p.index_of(id)).dim;
             })
        .def("leq",
             [](const StratumPoset& p, const std::string& a, const std::string& b) {
                 return p.leq(p.index_of(a), p.index_of(b));
             })
        .def("validate", &StratumPoset::validate)
        .def("minimal",
             [](const StratumPoset& p) {
                 std::vector<std::string> out;
                 for (auto i : p.minimal_elements()) out.push_back(p.stratum(i).id);
                 return out;
             })
        .def("maximal", [](const StratumPoset& p) {
            std::vector<std::string> out;
            for (auto i : p.maximal_elements()) out.push_back(p.stratum(i).id);
            return out;
        });

    py::class_<StratifiedGermModel>(m, "Germ")
        .def(py::init([](const StratumPoset& poset, const PyIncidence& nij,
                         const std::string& label) {
                 StratifiedGermModel g;
                 g.poset = poset;
                 g.nij = table_from_py(poset, nij);
                 g.label = label;
                 return g;
             }),
             py::arg("poset"), py::arg("nij"), py::arg("label") = "")
        .def_readonly("poset", &StratifiedGermModel::poset)
        .def_readwrite("label", &StratifiedGermModel::label)
        .def_readwrite("notes", &StratifiedGermModel::notes)
        .def("nij", [](const StratifiedGermModel& g) {
            return table_to_py(g.poset, g.nij);
        });

    m.def("germ_k_lines", &germ_k_lines, py::arg("k"));
    m.def("validate_germ",
          [](const StratifiedGermModel& g) { return validate_germ(g).issues; });

    m.def(
        "invert_incidence",
        [](const StratumPoset& poset, const PyIncidence& n) {
            return table_to_py(poset, invert_incidence(poset, table_from_py(poset, n)));
        },
        py::arg("poset"), py::arg("n"));
    m.def(
        "chain_sum_inverse",
        [](const StratumPoset& poset, const PyIncidence& n, const std::string& i,
           const std::string& j) {
            return chain_sum_inverse(poset, table_from_py(poset, n), poset.index_of(i),
                                     poset.index_of(j));
        },
        py::arg("poset"), py::arg("n"), py::arg("i"), py::arg("j"));

    m.def(
        "radial_index_via_theorem4",
        [](const StratifiedGermModel& g, const std::map<std::string, std::int64_t>& eu) {
            return radial_index_via_theorem4(
                       g, vector_from_py(eu, IndexKind::EulerObstruction))
                .values;
        },
        py::arg("germ"), py::arg("eu"));
    m.def(
        "euler_obstruction_via_corollary",
        [](const StratifiedGermModel& g, const std::map<std::string, std::int64_t>& ind) {
            return euler_obstruction_via_corollary(
                       g, vector_from_py(ind, IndexKind::RadialIndex))
                .values;
        },
        py::arg("germ"), py::arg("ind"));
    m.def(
        "ind_vector_of_df",
        [](const StratifiedGermModel& g,
           const std::map<std::string, std::int64_t>& chi) {
            return ind_vector_of_df(g, chi).values;
        },
        py::arg("germ"), py::arg("chi_on_closures"));
    m.def("eu_df_full_expansion", &eu_df_full_expansion, py::arg("germ"),
          py::arg("chi_on_closures"));

    m.def(
        "aggregate_radial_index",
        [](const std::vector<std::pair<int, std::int64_t>>& points) {
            std::vector<LocalSingularPointDatum> data;
            for (const auto& [dim, index] : points) data.push_back({dim, index});
            return aggregate_radial_index(data);
        },
        py::arg("points"));
    m.def("complex_from_real_index", &complex_from_real_index, py::arg("n"),
          py::arg("real_index"));
    m.def("real_index_of_df", &real_index_of_df, py::arg("chi_negative_fibre"));
    m.def("complex_index_of_df", &complex_index_of_df, py::arg("n"), py::arg("chi_fibre"));
    m.def("index_obstruction_gap", &index_obstruction_gap, py::arg("n"),
          py::arg("chi_generic_linear"));
    m.def("eu_of_df", &eu_of_df, py::arg("n"), py::arg("chi_generic_linear"),
          py::arg("chi_fibre"));
    m.def(
        "resolution_obstruction",
        [](int n, std::int64_t chi_exceptional, std::int64_t ind) {
            return resolution_obstruction({n, chi_exceptional}, ind);
        },
        py::arg("n"), py::arg("chi_exceptional"), py::arg("ind"));

    m.def(
        "milnor_jacobian",
        [](const std::string& poly, int max_truncation) {
            return milnor_jacobian(parse_polynomial(poly), max_truncation);
        },
        py::arg("polynomial"), py::arg("max_truncation") = 40);
    m.def(
        "milnor_quasihomogeneous",
        [](const std::vector<long>& weights, long degree) {
            return milnor_quasihomogeneous({weights, degree});
        },
        py::arg("weights"), py::arg("degree"));
    m.def(
        "is_quasihomogeneous",
        [](const std::string& poly, const std::vector<long>& weights, long degree) {
            return is_quasihomogeneous(parse_polynomial(poly), {weights, degree});
        },
        py::arg("polynomial"), py::arg("weights"), py::arg("degree"));
    m.def("chi_hypersurface_fibre", &chi_hypersurface_fibre, py::arg("n"), py::arg("mu"));

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def_static("from_maximal", &SimplicialComplex::from_maximal, py::arg("maximal"))
        .def_static("from_simplices", &SimplicialComplex::from_simplices,
                    py::arg("simplices"))
        .def("__len__", &SimplicialComplex::simplex_count)
        .def("simplices",
             [](const SimplicialComplex& K) {
                 return std::vector<Simplex>(K.simplices().begin(), K.simplices().end());
             })
        .def("vertices", &SimplicialComplex::vertices)
        .def("validate", &SimplicialComplex::validate)
        .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) {
            return a == b;
        });

    py::class_<PoincareHopfReport>(m, "PoincareHopfReport")
        .def_readonly("index_sum", &PoincareHopfReport::index_sum)
        .def_readonly("chi", &PoincareHopfReport::chi)
        .def_readonly("equal", &PoincareHopfReport::equal);

    py::class_<SuspensionReport>(m, "SuspensionReport")
        .def_readonly("index_bottom", &SuspensionReport::index_bottom)
        .def_readonly("index_top", &SuspensionReport::index_top)
        .def_readonly("index_sum", &SuspensionReport::index_sum)
        .def_readonly("chi_suspension", &SuspensionReport::chi_suspension)
        .def_readonly("equal", &SuspensionReport::equal);

    m.def("euler_characteristic", &euler_characteristic, py::arg("complex"));
    m.def("link", &stratindex::link, py::arg("complex"), py::arg("vertex"));
    m.def(
        "lower_link",
        [](const SimplicialComplex& K, VertexId v, const PyHeights& h) {
            return lower_link(K, v, heights_from_py(h));
        },
        py::arg("complex"), py::arg("vertex"), py::arg("heights"));
    m.def(
        "pl_radial_index",
        [](const SimplicialComplex& K, VertexId v, const PyHeights& h) {
            return pl_radial_index(K, v, heights_from_py(h));
        },
        py::arg("complex"), py::arg("vertex"), py::arg("heights"));
    m.def(
        "poincare_hopf_check",
        [](const SimplicialComplex& K, const PyHeights& h) {
            return poincare_hopf_check(K, heights_from_py(h));
        },
        py::arg("complex"), py::arg("heights"));
    m.def("suspension_check", &suspension_check, py::arg("chi_link"));
    m.def("cone", &cone, py::arg("complex"), py::arg("apex"));
    m.def("suspension", &suspension, py::arg("complex"), py::arg("bottom"),
          py::arg("top"));
    m.def("barycentric_subdivision", &barycentric_subdivision, py::arg("complex"));
    m.def(
        "generate_heights",
        [](const SimplicialComplex& K, std::uint64_t seed) {
            std::map<VertexId, std::string> out;
            for (const auto& [v, r] : generate_heights(K, seed).height)
                out[v] = to_string(r);
            return out;
        },
        py::arg("complex"), py::arg("seed"));

    m.def("circle", &fixtures::circle);
    m.def("sphere", &fixtures::sphere);
    m.def("torus", &fixtures::torus);
    m.def("wedge_of_circles", &fixtures::wedge_of_circles);

    m.def("catalog_labels", [] {
        std::vector<std::string> out;
        for (const auto& e : builtin_catalog()) out.push_back(e.label);
        return out;
    });
    m.def("verify_catalog", [] {
        std::vector<std::pair<std::string, std::vector<std::string>>> out;
        for (const auto& r : verify_catalog()) out.emplace_back(r.label, r.failures);
        return out;
    });
}
