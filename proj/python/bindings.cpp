#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ic/census.hpp"
#include "ic/errors.hpp"
#include "ic/families.hpp"
#include "ic/formulas.hpp"
#include "ic/game.hpp"
#include "ic/graph6.hpp"
#include "ic/oracle.hpp"
#include "ic/recognition.hpp"

namespace py = pybind11;

namespace {

py::int_ big(const std::string& decimal) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(decimal.c_str(), nullptr, 10));
}
py::int_ big(ic::Count c) { return big(ic::to_string(c)); }
py::int_ big(const ic::ExactCount& c) { return big(c.str()); }

py::dict census_dict(const ic::CycleCensus& c) {
    py::dict by;
    for (int len = 3; len <= c.n; ++len) by[py::int_(len)] = big(c.at(len));
    py::dict d;
    d["n"] = c.n;
    d["by_length"] = by;
    d["f"] = big(c.total());
    d["f_odd"] = big(c.odd());
    d["f_even"] = big(c.even());
    d["holes"] = big(c.holes());
    d["odd_holes"] = big(c.odd_holes());
    return d;
}

ic::PathParity parity(const std::string& s) {
    if (s == "odd") return ic::PathParity::odd;
    if (s == "even") return ic::PathParity::even;
    if (s == "all") return ic::PathParity::all;
    throw ic::InputError("parity must be all, odd or even");
}

py::dict partition_dict(const ic::ClusterPartition& p) {
    py::dict d;
    d["clusters"] = p.clusters;
    d["cyclic"] = p.cyclic;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Induced cycle and path census over small graphs";

    py::register_exception<ic::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ic::UnsupportedError>(m, "UnsupportedError", PyExc_RuntimeError);

    py::class_<ic::Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<ic::Edge>& edges) { return ic::Graph::from_edge_list(n, edges); }),
             py::arg("n"), py::arg("edges") = std::vector<ic::Edge>{})
        .def_static("from_graph6", [](const std::string& s) { return ic::parse_graph6(s); })
        .def("to_graph6", [](const ic::Graph& g) { return ic::to_graph6(g); })
        .def_property_readonly("order", &ic::Graph::order)
        .def("edges", &ic::Graph::edges)
        .def("degree", &ic::Graph::degree)
        .def("adjacent", &ic::Graph::adjacent)
        .def("canonical_code", [](const ic::Graph& g) { return ic::canonical_code(g).code; })
        .def("ball", [](const ic::Graph& g, int v, int r) { return ic::ball(g, v, r).to_vector(); })
        .def("__eq__", [](const ic::Graph& a, const ic::Graph& b) { return a == b; })
        .def("__repr__", [](const ic::Graph& g) { return "Graph('" + ic::to_graph6(g) + "')"; });

    m.def("construct", [](const std::string& family, int n, int variant, const std::string& intra) {
        auto b = ic::build_family({ic::parse_family_tag(family), n, variant},
                                  intra == "full" ? ic::IntraPattern::full() : ic::IntraPattern::empty());
        return py::make_tuple(b.graph, partition_dict(b.partition));
    }, py::arg("family"), py::arg("n"), py::arg("variant") = 0, py::arg("intra") = "empty");

    m.def("build_braid", [](const std::vector<int>& sizes, bool cyclic, const std::string& intra) {
        auto b = ic::build_braid({sizes, cyclic, {intra == "full" ? ic::IntraPattern::full() : ic::IntraPattern::empty()}});
        return py::make_tuple(b.graph, partition_dict(b.partition));
    }, py::arg("sizes"), py::arg("cyclic") = false, py::arg("intra") = "empty");

    m.def("count_induced_cycles", [](const ic::Graph& g, unsigned threads) {
        return census_dict(ic::count_induced_cycles(g, {threads}));
    }, py::arg("g"), py::arg("threads") = 1);
    m.def("count_cycles_through", [](const ic::Graph& g, int v) { return census_dict(ic::count_cycles_through(g, v)); });
    m.def("slow_census", [](const ic::Graph& g) { return census_dict(ic::slow_census(g)); });

    m.def("count_induced_paths", [](const ic::Graph& g, int x, int y) {
        auto c = ic::count_induced_st_paths(g, x, y);
        py::dict d;
        py::dict by;
        for (int len = 1; len < static_cast<int>(c.by_length.size()); ++len) by[py::int_(len)] = big(c.at(len));
        d["by_length"] = by;
        d["p2"] = big(c.p2());
        d["p2_odd"] = big(c.p2_odd());
        d["p2_even"] = big(c.p2_even());
        return d;
    });
    m.def("p2_max", [](const ic::Graph& g, const std::string& par) {
        auto r = ic::p2_max(g, parity(par));
        return py::make_tuple(big(r.value), r.x, r.y);
    }, py::arg("g"), py::arg("parity") = "all");
    m.def("path_tree_stats", [](const ic::Graph& g, int x, int y) {
        auto t = ic::path_tree_stats(g, x, y);
        py::dict d;
        d["leaf_count"] = big(t.leaf_count);
        d["y_leaf_count"] = big(t.y_leaf_count);
        d["child_count_profiles"] = std::vector<std::vector<int>>(t.child_count_profiles.begin(), t.child_count_profiles.end());
        d["balanced"] = t.balanced;
        return d;
    });

    m.def("verify_braid", [](const ic::Graph& g, const std::vector<std::vector<int>>& clusters, bool cyclic) {
        auto r = ic::verify_braid(g, {clusters, cyclic});
        py::dict d;
        d["verified"] = r.verified;
        d["family"] = r.family ? py::object(py::str(ic::to_string(r.family->tag))) : py::object(py::none());
        d["cluster_sizes"] = r.cluster_sizes;
        if (r.witness) d["witness"] = r.witness->describe();
        else d["witness"] = py::none();
        return d;
    }, py::arg("g"), py::arg("clusters"), py::arg("cyclic") = false);
    m.def("discover_cyclic_braid", [](const ic::Graph& g) -> py::object {
        auto p = ic::discover_cyclic_braid(g);
        if (!p) return py::none();
        return partition_dict(*p);
    });
    m.def("matching_families", [](const ic::Graph& g) {
        std::vector<std::string> out;
        for (auto t : ic::matching_families(g)) out.push_back(ic::to_string(t));
        return out;
    });
    m.def("maximal_3braids", [](const ic::Graph& g) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& p : ic::maximal_3braids(g)) out.push_back(p.clusters);
        return out;
    });

    m.def("solve_typical_game", [](const ic::Graph& g, int v, int w) {
        auto r = ic::solve_typical_game(g, v, w);
        py::dict d;
        d["winner"] = ic::to_string(r.winner);
        d["reason"] = r.reason ? py::object(py::str(*r.reason)) : py::object(py::none());
        d["trace"] = r.trace;
        return d;
    });
    m.def("atypical_set", [](const ic::Graph& g, int v) {
        auto r = ic::atypical_set(g, v);
        py::dict d;
        d["atypical"] = r.atypical;
        d["typical"] = r.typical;
        d["exempt"] = r.exempt;
        return d;
    });
    m.def("local_structure", [](const ic::Graph& g, int z) -> py::object {
        auto s = ic::local_structure(g, z);
        if (!s) return py::none();
        py::dict d;
        d["V"] = s->V;
        d["Z"] = s->Z;
        d["W"] = s->W;
        return d;
    });

    m.def("exhaustive_max", [](int n, const std::string& quantity, unsigned threads) {
        ic::SweepOptions o;
        o.threads = threads;
        auto r = ic::exhaustive_max(n, ic::parse_quantity(quantity), o);
        py::dict d;
        d["n"] = r.n;
        d["max"] = big(r.max);
        d["extremal_codes"] = r.extremal_codes;
        d["graphs_scanned"] = r.graphs_scanned;
        return d;
    }, py::arg("n"), py::arg("quantity") = "p2", py::arg("threads") = 1);

    m.def("f2", [](int n) { return big(ic::f2(n)); });
    m.def("f2_odd", [](int n) { return big(ic::f2_odd(n)); });
    m.def("f2_even", [](int n) { return big(ic::f2_even(n)); });
    m.def("m_lower", [](int n) { return big(ic::m_lower(n)); });
    m.def("vertex_cycle_bound", &ic::vertex_cycle_bound);
    m.def("short_cycle_mass", [](int n) { return big(ic::short_cycle_mass(n)); });
}
