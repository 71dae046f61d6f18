#include "bchrome/construct.hpp"
#include "bchrome/error.hpp"
#include "bchrome/generators.hpp"
#include "bchrome/io.hpp"
#include "bchrome/oracle.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bchrome;
using namespace pybind11::literals;

namespace {

Strategy strategy_named(const std::string& name)
{
    const auto s = parse_strategy(name);
    if (!s)
        throw Error(ErrorCode::InvalidParameter, "unknown strategy '" + name + "'");
    return *s;
}

SearchLimits limits_from(double time_budget, std::uint64_t node_budget, std::size_t max_vertices)
{
    SearchLimits limits;
    limits.time_budget = std::chrono::milliseconds(static_cast<long long>(time_budget * 1000));
    limits.node_budget = node_budget;
    limits.max_vertices = max_vertices;
    return limits;
}

py::object colors_or_none(const std::optional<PartialColoring>& c)
{
    if (!c)
        return py::none();
    return py::cast(std::vector<Color>(c->colors().begin(), c->colors().end()));
}

} // namespace

PYBIND11_MODULE(_bchrome, m)
{
    m.doc() = "b-colorings with d+1 colors on regular girth-5 graphs";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    (void)error;

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
             "n"_a, "edges"_a)
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("neighbors",
             [](const Graph& g, Vertex v) {
                 require_vertex(g, v);
                 const auto nb = g.neighbors(v);
                 return std::vector<Vertex>(nb.begin(), nb.end());
             })
        .def("degree", [](const Graph& g, Vertex v) { require_vertex(g, v); return g.degree(v); })
        .def("edges", &Graph::edges)
        .def("regular_degree", &Graph::regular_degree)
        .def("girth", [](const Graph& g) { return girth(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
        });

    m.def("petersen", &petersen);
    m.def("hoffman_singleton", &hoffman_singleton);
    m.def("robertson", &robertson);
    m.def("cycle", &cycle, "n"_a);
    m.def(
        "random_regular",
        [](int d, int n, std::uint64_t seed, int girth_min, int max_attempts) {
            return random_regular_girth({Family::RandomRegular, d, n, girth_min, seed, max_attempts});
        },
        "d"_a, "n"_a, "seed"_a = 1, "girth_min"_a = 5, "max_attempts"_a = 20);
    m.def("relabel", &relabel, "g"_a, "seed"_a);

    m.def("parse_graph6", &parse_graph6, "text"_a);
    m.def("write_graph6", &write_graph6, "g"_a);
    m.def("parse_dimacs", &parse_dimacs, "text"_a);
    m.def("write_dimacs", &write_dimacs, "g"_a);
    m.def("parse_graph", &parse_graph, "text"_a);

    m.def("count_c6_in_n2", &count_c6_in_n2, "g"_a, "x"_a);
    m.def("closed_bunches", &closed_bunches, "g"_a, "x"_a);
    m.def(
        "hypothesis_report_json",
        [](const Graph& g, unsigned threads) {
            py::gil_scoped_release release;
            return hypothesis_report_json(hypothesis_report(g, threads));
        },
        "g"_a, "threads"_a = 1);

    m.def(
        "color_json",
        [](const Graph& g, const std::string& strategy, std::optional<Vertex> x) {
            Certificate cert;
            if (strategy == "auto" && !x) {
                cert = auto_color(g);
            } else {
                const auto facts = GraphFacts::of(g);
                const Vertex center = x.value_or(0);
                require_vertex(g, center);
                Strategy s;
                if (strategy == "auto") {
                    const auto census = census_vertex(g, facts, center);
                    if (census.strategies.empty())
                        throw Error(ErrorCode::NoStrategyApplies, "vertex " + std::to_string(center));
                    s = census.strategies.front();
                } else {
                    s = strategy_named(strategy);
                }
                cert = run_strategy(s, g, facts, center);
            }
            return write_certificate(cert);
        },
        "g"_a, "strategy"_a = "auto", "x"_a = py::none());

    m.def(
        "verify_json",
        [](const Graph& g, const std::string& json) {
            const auto verdict = verify_certificate(read_certificate(json), g);
            return py::make_tuple(verdict.accepted, std::string(to_string(verdict.reason)), verdict.detail);
        },
        "g"_a, "certificate"_a);

    m.def(
        "is_b_coloring",
        [](const Graph& g, const std::vector<Color>& colors, Color k) {
            if (colors.size() != g.order())
                throw Error(ErrorCode::InvalidParameter, "one color per vertex expected");
            const PartialColoring c(k, colors);
            return c.is_total() && is_proper(c, g) && is_b_coloring(c, g);
        },
        "g"_a, "colors"_a, "k"_a);

    m.def(
        "b_coloring_exists",
        [](const Graph& g, int k, double time_budget, std::uint64_t node_budget, std::size_t max_vertices) {
            SearchResult r;
            {
                py::gil_scoped_release release;
                r = b_coloring_exists(g, k, limits_from(time_budget, node_budget, max_vertices));
            }
            return py::make_tuple(std::string(to_string(r.outcome)), colors_or_none(r.witness), r.nodes);
        },
        "g"_a, "k"_a, "time_budget"_a = 60.0, "node_budget"_a = SearchLimits{}.node_budget,
        "max_vertices"_a = SearchLimits{}.max_vertices);

    m.def(
        "b_chromatic_number",
        [](const Graph& g, double time_budget, std::uint64_t node_budget, std::size_t max_vertices) {
            BChromaticResult r;
            {
                py::gil_scoped_release release;
                r = exact_b_chromatic(g, limits_from(time_budget, node_budget, max_vertices));
            }
            return py::make_tuple(r.value, r.exact, colors_or_none(r.witness));
        },
        "g"_a, "time_budget"_a = 60.0, "node_budget"_a = SearchLimits{}.node_budget,
        "max_vertices"_a = SearchLimits{}.max_vertices);
}
