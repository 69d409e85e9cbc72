#include "ore/bound.hpp"
#include "ore/canon.hpp"
#include "ore/construct.hpp"
#include "ore/errors.hpp"
#include "ore/graph.hpp"
#include "ore/graph6.hpp"
#include "ore/oracle.hpp"
#include "ore/recognize.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

namespace py = pybind11;
using namespace ore;

namespace {

std::optional<int> to_python(Distance d)
{
    if (!d.reachable())
        return std::nullopt;
    return d.value();
}

py::bytes form_bytes(const CanonicalForm& f) { return py::bytes(f.bytes()); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Largest graphs of given order and diameter";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }),
             py::arg("n"), py::arg("edges"))
        .def_static("complete", &Graph::complete)
        .def_static("path", &Graph::path)
        .def_static("cycle", &Graph::cycle)
        .def_property_readonly("order", &Graph::order)
        .def("size", &Graph::size)
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def("edges", &Graph::edges)
        .def("relabelled", [](const Graph& g, const std::vector<Vertex>& perm) { return g.relabelled(perm); })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(order=" << g.order() << ", size=" << g.size() << ")";
            return s.str();
        });

    m.def("bfs_distances", [](const Graph& g, Vertex source) {
        std::vector<std::optional<int>> out;
        for (auto d : bfs_distances(g, source))
            out.push_back(to_python(d));
        return out;
    }, "Distances from source; None for unreachable vertices.");
    m.def("diameter", [](const Graph& g) { return to_python(diameter(g)); },
          "Diameter, or None when the graph is disconnected.");
    m.def("is_clique", [](const Graph& g, const std::vector<Vertex>& vs) { return is_clique(g, vs); });
    m.def("is_geodesic", [](const Graph& g, const std::vector<Vertex>& p) { return is_geodesic(g, p); });

    m.def("encode_g6", [](const Graph& g) { return encode_g6(g); });
    m.def("decode_g6", [](const std::string& line) { return decode_g6(line); });

    m.def("canonical_form", [](const Graph& g) { return form_bytes(canonical_form(g)); });
    m.def("are_isomorphic", &are_isomorphic);

    py::class_<BoundBreakdown>(m, "BoundBreakdown")
        .def_readonly("path_edges", &BoundBreakdown::path_edges)
        .def_readonly("cross_edges", &BoundBreakdown::cross_edges)
        .def_readonly("clique_edges", &BoundBreakdown::clique_edges)
        .def_readonly("total", &BoundBreakdown::total);
    m.def("ore_max_size", [](std::int64_t n, std::int64_t d) { return ore_max_size({n, d}); },
          py::arg("n"), py::arg("d"));
    m.def("bound_breakdown", [](std::int64_t n, std::int64_t d) { return bound_breakdown({n, d}); },
          py::arg("n"), py::arg("d"));

    py::class_<ExtremalParams>(m, "ExtremalParams")
        .def(py::init<int, int, int, int, int, int>(), py::arg("n"), py::arg("d"),
             py::arg("window_start"), py::arg("window_len"), py::arg("first_count"),
             py::arg("last_count"))
        .def_readonly("n", &ExtremalParams::n)
        .def_readonly("d", &ExtremalParams::d)
        .def_readonly("window_start", &ExtremalParams::window_start)
        .def_readonly("window_len", &ExtremalParams::window_len)
        .def_readonly("first_count", &ExtremalParams::first_count)
        .def_readonly("last_count", &ExtremalParams::last_count)
        .def(py::self == py::self);
    m.def("realize", &realize);
    m.def("enumerate_params", &enumerate_params, py::arg("n"), py::arg("d"));
    m.def("enumerate_extremal_up_to_iso", [](int n, int d) {
        py::list out;
        for (const auto& cls : enumerate_extremal_up_to_iso(n, d))
            out.append(py::make_tuple(form_bytes(cls.form), cls.graph));
        return out;
    }, py::arg("n"), py::arg("d"), "List of (canonical form bytes, representative graph).");

    py::enum_<TripleChoice>(m, "TripleChoice")
        .value("FirstThree", TripleChoice::FirstThree)
        .value("LastThree", TripleChoice::LastThree);
    py::class_<Certificate>(m, "Certificate")
        .def(py::init<>())
        .def_readwrite("path", &Certificate::path)
        .def_readwrite("s_vertices", &Certificate::s_vertices)
        .def_readwrite("window_start", &Certificate::window_start)
        .def_readwrite("window_len", &Certificate::window_len)
        .def_readwrite("choice", &Certificate::choice);
    m.def("is_extremal", &is_extremal, py::arg("g"), py::arg("d"));
    m.def("extract_certificate", &extract_certificate, py::arg("g"), py::arg("d"),
          py::arg("geodesic_limit") = kDefaultGeodesicLimit);
    m.def("validate_certificate", &validate_certificate, py::arg("g"), py::arg("certificate"),
          py::arg("d"));
    m.def("geodesic_neighbor_lemma",
          [](const Graph& g, const std::vector<Vertex>& path) { return geodesic_neighbor_lemma(g, path); });
    m.def("window_union_lemma", &window_union_lemma);

    py::class_<OracleReport>(m, "OracleReport")
        .def_readonly("n", &OracleReport::n)
        .def_readonly("d", &OracleReport::d)
        .def_readonly("max_size", &OracleReport::max_size)
        .def_readonly("labeled_count", &OracleReport::labeled_count)
        .def_readonly("pruned", &OracleReport::pruned)
        .def_property_readonly("extremal_forms", [](const OracleReport& r) {
            py::list out;
            for (const auto& f : r.extremal_forms)
                out.append(form_bytes(f));
            return out;
        })
        .def_property_readonly("elapsed", [](const OracleReport& r) { return r.elapsed.count(); });
    m.def("oracle_search", [](int n, int d, unsigned workers, bool pruned) {
        OracleOptions options;
        options.workers = workers;
        options.pruned = pruned;
        py::gil_scoped_release release;
        return oracle_search(n, d, options);
    }, py::arg("n"), py::arg("d"), py::arg("workers") = 1, py::arg("pruned") = false);
}
