#include "construct_internal.hpp"

#include <thread>

namespace bchrome {

VertexCensus census_vertex(const Graph& g, const GraphFacts& facts, Vertex v)
{
    VertexCensus census;
    census.vertex = v;
    census.c6_through = count_c6_through_vertex(g, v);
    try {
        census.c6_in_n2 = count_c6_in_n2(g, v);
        census.closed_bunches = static_cast<int>(closed_bunches(g, v).size());
    } catch (const Error& e) {
        if (e.code() != ErrorCode::GirthTooSmall)
            throw;
    }

    std::string setting;
    if (!facts.degree())
        setting = "graph is not regular";
    else if (*facts.degree() < 7)
        setting = "d<7";
    else if (!facts.girth() || *facts.girth() != 5)
        setting = "girth!=5";
    if (!setting.empty()) {
        census.reasons.push_back(setting);
        return census;
    }

    if (census.c6_through == 0)
        census.strategies.push_back(Strategy::NoC6);
    else
        census.reasons.push_back("no-c6: on " + std::to_string(census.c6_through) + " six-cycles");
    if (census.c6_in_n2 && *census.c6_in_n2 <= 5)
        census.strategies.push_back(Strategy::BoundedC6);
    else
        census.reasons.push_back("bounded-c6: " + std::to_string(census.c6_in_n2.value_or(-1)) +
                                 " six-cycles in G[N2[x]] > 5");
    if (census.closed_bunches && *census.closed_bunches >= 2)
        census.strategies.push_back(Strategy::TwoBunch);
    else
        census.reasons.push_back("two-bunch: " + std::to_string(census.closed_bunches.value_or(0)) +
                                 " closed bunches < 2");
    return census;
}

HypothesisReport hypothesis_report(const Graph& g, unsigned threads)
{
    const auto facts = GraphFacts::of(g);
    HypothesisReport report;
    report.n = g.order();
    report.m = g.size();
    report.d = facts.degree();
    report.girth = facts.girth();
    report.degree_at_least_7 = report.d && *report.d >= 7;
    report.girth_exactly_5 = report.girth && *report.girth == 5;
    if (report.d) {
        const long long d = *report.d;
        report.order_bound = 2 * d * d * d - 2 * d * d + 2 * d - 1;
        report.within_order_bound = static_cast<long long>(report.n) <= report.order_bound;
    }

    report.vertices.resize(g.order());
    auto work = [&](std::size_t start, std::size_t stride) {
        for (std::size_t v = start; v < g.order(); v += stride)
            report.vertices[v] = census_vertex(g, facts, static_cast<Vertex>(v));
    };
    if (threads <= 1 || g.order() < 2) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work, t, threads);
        for (auto& th : pool)
            th.join();
    }
    for (const auto& census : report.vertices)
        if (census.c6_through > 0)
            report.contains_c6 = true;
    return report;
}

Certificate auto_color(const Graph& g)
{
    const auto facts = GraphFacts::of(g);
    std::string reasons;
    for (std::size_t v = 0; v < g.order(); ++v) {
        const auto census = census_vertex(g, facts, static_cast<Vertex>(v));
        if (!census.strategies.empty())
            return run_strategy(census.strategies.front(), g, facts, static_cast<Vertex>(v));
        if (v < 3) {
            reasons += "vertex " + std::to_string(v) + ":";
            for (const auto& r : census.reasons)
                reasons += " " + r + ";";
            reasons += " ";
        }
    }
    if (g.order() == 0)
        reasons = "empty graph";
    throw Error(ErrorCode::NoStrategyApplies, reasons);
}

} // namespace bchrome
