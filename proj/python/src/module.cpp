#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "cli.hpp"
#include "pidecomp/baker.hpp"
#include "pidecomp/checkers.hpp"
#include "pidecomp/decomposition.hpp"
#include "pidecomp/errors.hpp"
#include "pidecomp/extremal.hpp"
#include "pidecomp/generators.hpp"
#include "pidecomp/patterns.hpp"

namespace py = pybind11;
using namespace pidecomp;

namespace {

using GraphHandle = std::shared_ptr<Graph>;

GraphHandle hold(Graph g) { return std::make_shared<Graph>(std::move(g)); }

py::object to_int(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Edge> e(edges.begin(), edges.end());
    return Graph(n, e);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Vertex-partition decompositions and witness mining on small graphs.";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<SizeError>(m, "SizeError", PyExc_RuntimeError);

    py::class_<Graph, GraphHandle>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return hold(from_edges(n, edges)); }),
             py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", [](const Graph& g) {
            std::vector<std::pair<int, int>> out;
            for (auto e : g.edges()) out.push_back(e);
            return out;
        })
        .def("neighbors", [](const Graph& g, int v) {
            check_vertex(g, v);
            auto nb = g.neighbors(v);
            return std::vector<int>(nb.begin(), nb.end());
        })
        .def("degree", [](const Graph& g, int v) {
            check_vertex(g, v);
            return g.degree(v);
        })
        .def("adjacent", [](const Graph& g, int u, int v) {
            check_vertex(g, u);
            check_vertex(g, v);
            return g.adjacent(u, v);
        })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__len__", &Graph::vertex_count)
        .def("__repr__", [](const Graph& g) {
            return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
                   " edges)";
        });

    m.def("load_edge_list", [](const std::string& text) { return hold(load_edge_list(std::string_view(text))); });
    m.def("save_edge_list", &save_edge_list);
    m.def("graph_hash", &graph_hash);
    m.def("generate", [](const std::string& family, const std::vector<long>& params, std::uint64_t seed) {
        return hold(generate({parse_family(family), params, seed}));
    }, py::arg("family"), py::arg("params"), py::arg("seed") = 0);
    m.def("power_graph", [](const Graph& g, int p) { return hold(power_graph(g, p)); });
    m.def("subdivide", [](const Graph& g, int p) { return hold(subdivide(g, p)); });
    m.def("subset_complement", [](const Graph& g, const std::vector<int>& mark) {
        return hold(subset_complement(g, VertexSubset(g.vertex_count(), mark)));
    });
    m.def("induced_subgraph", [](const Graph& g, const std::vector<int>& vertices) {
        auto sub = induced_subgraph(g, std::span<const int>(vertices));
        return py::make_tuple(hold(std::move(sub.graph)), sub.to_parent);
    });

    m.def("compute_treedepth", [](const Graph& g) {
        auto r = compute_treedepth(g);
        return py::make_tuple(r.depth, r.forest.parent);
    });
    m.def("contains_biclique_subgraph", [](const Graph& g, int s, int t) -> py::object {
        auto r = contains_biclique_subgraph(g, s, t);
        if (!r.found) return py::none();
        return py::make_tuple(r.left, r.right);
    });
    m.def("half_graph_order", [](const Graph& g, int exact_limit) {
        auto r = half_graph_order(g, exact_limit);
        return py::make_tuple(r.order, r.witness.a, r.witness.b, r.exact);
    }, py::arg("g"), py::arg("exact_limit") = 16);
    m.def("vc_dimension", [](const Graph& g, int exact_limit) {
        auto r = vc_dimension(g, exact_limit);
        return py::make_tuple(r.dimension, r.witness.set);
    }, py::arg("g"), py::arg("exact_limit") = 6);

    m.def("_kst_bound", [](long n, long s, long t) {
        auto b = kst_bound(n, s, t);
        return py::make_tuple(boost::multiprecision::numerator(b.value).str(),
                              boost::multiprecision::denominator(b.value).str(), b.exact);
    });
    m.def("zarankiewicz_brute", &zarankiewicz_brute);
    m.def("compose_bound", [](long g, long f, int p) { return to_int(compose_bound(g, f, p)); });

    m.def("exact_mis", [](const Graph& g) { return exact_mis(g).vertices; });
    m.def("baker_mis", [](const Graph& g, int root, int D) {
        auto r = baker_mis(g, root, D);
        return py::make_tuple(r.vertices, r.shift);
    }, py::arg("g"), py::arg("root"), py::arg("D"));

    py::class_<Decomposition>(m, "Decomposition")
        .def(py::init([](GraphHandle g, const std::vector<int>& labels, int p) {
            return Decomposition(std::move(g), labels, p);
        }), py::arg("graph"), py::arg("labels"), py::arg("p"))
        .def_property_readonly("p", &Decomposition::p)
        .def_property_readonly("part_count", &Decomposition::part_count)
        .def_property_readonly("labels", &Decomposition::labels)
        .def_property_readonly("parts", &Decomposition::parts)
        .def("part_of", [](const Decomposition& d, int v) {
            check_vertex(d.graph(), v);
            return d.part_of(v);
        })
        .def("to_text", &write_decomposition);

    m.def("verify", [](const Decomposition& d, const std::string& checker) -> py::object {
        auto v = verify(d, parse_checker(checker));
        if (v.pass) return py::none();
        return py::cast(v.counterexample);
    }, "None when every p-union passes, otherwise the first failing part subset.");
    m.def("intersect", &intersect);
    m.def("baker_decomposition", [](GraphHandle g, int root, int D, int p) {
        return layers_to_decomposition(g, bfs_layers(*g, root), D, p);
    }, py::arg("g"), py::arg("root"), py::arg("D"), py::arg("p"));
    m.def("power_coloring", [](GraphHandle g, int p) { return decompose_power_coloring(g, p).decomposition; },
          py::arg("g"), py::arg("p"));
    m.def("densest_part_pair", [](const Decomposition& d) {
        auto r = densest_part_pair(d);
        return py::make_tuple(r.i, r.j, r.edges);
    });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::dispatch(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
