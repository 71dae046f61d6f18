#include "construct_internal.hpp"

#include "bchrome/transversal.hpp"

#include <algorithm>
#include <functional>

namespace bchrome {

using detail::idx;

std::string_view to_string(Strategy s)
{
    switch (s) {
    case Strategy::NoC6: return "no-c6";
    case Strategy::BoundedC6: return "bounded-c6";
    case Strategy::TwoBunch: return "two-bunch";
    }
    return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view name)
{
    if (name == "no-c6")
        return Strategy::NoC6;
    if (name == "bounded-c6")
        return Strategy::BoundedC6;
    if (name == "two-bunch")
        return Strategy::TwoBunch;
    return std::nullopt;
}

namespace detail {

void require_accepted(const Certificate& cert, const Graph& g)
{
    auto verdict = verify_certificate(cert, g);
    if (!verdict)
        throw Error(ErrorCode::InternalInvariantViolation, "constructed certificate rejected: " +
                                                               std::string(to_string(verdict.reason)) + " (" +
                                                               verdict.detail + ")");
}

Certificate finish_neighbor_certificate(const Graph& g, const GraphFacts& facts, PartialColoring& c,
                                        const BunchStructure& bs, Strategy strategy)
{
    greedy_complete(c, g);
    Certificate cert;
    cert.strategy = std::string(to_string(strategy));
    cert.center = bs.center();
    cert.neighbor_order = bs.neighbor_order();
    cert.k = c.k();
    cert.colors.assign(c.colors().begin(), c.colors().end());
    cert.b_vertices[c.k()] = bs.center();
    for (int t = 1; t <= bs.count(); ++t)
        cert.b_vertices[static_cast<Color>(t)] = bs.neighbor(t);
    cert.graph = facts.fingerprint;
    require_accepted(cert, g);
    return cert;
}

} // namespace detail

namespace {

// c(x) = d+1, c(x_t) = t, X_1 gets 2..d in position order.
PartialColoring seed_neighborhood(const Graph& g, const BunchStructure& bs, int d)
{
    PartialColoring c(g.order(), static_cast<Color>(d + 1));
    c.assign(bs.center(), static_cast<Color>(d + 1));
    for (int t = 1; t <= d; ++t)
        c.assign_proper(g, bs.neighbor(t), static_cast<Color>(t));
    Color next = 2;
    for (Vertex v : bs.bunch(1))
        c.assign_proper(g, v, next++);
    return c;
}

void color_bunch_or_escalate(PartialColoring& c, const Graph& g, const BunchStructure& bs, int t)
{
    try {
        color_bunch(c, g, bs, t);
    } catch (const HallFailure& failure) {
        std::string positions;
        for (int p : failure.violator)
            positions += (positions.empty() ? "" : ",") + std::to_string(p);
        throw Error(ErrorCode::InternalInvariantViolation,
                    std::string(failure.what()) + "; violating positions {" + positions + "}");
    }
}

} // namespace

PartialColoring lemma_extension(const Graph& g, const BunchStructure& bs)
{
    return lemma_extension(g, GraphFacts::of(g), bs);
}

PartialColoring lemma_extension(const Graph& g, const GraphFacts& facts, const BunchStructure& bs)
{
    const int d = detail::require_strategy_setting(facts, false);
    auto c = seed_neighborhood(g, bs, d);
    for (int t = 2; t <= 4; ++t)
        color_bunch_or_escalate(c, g, bs, t);
    return c;
}

int backward_conflicts(const PartialColoring& c, const Graph& g, const BunchStructure& bs, int t)
{
    int count = 0;
    for (Vertex v : bs.bunch(t)) {
        if (!c.is_colored(v))
            continue;
        for (Vertex w : g.neighbors(v)) {
            const int b = bs.bunch_of(w);
            if (b != 0 && b < t && c[w] == c[v])
                ++count;
        }
    }
    return count;
}

RepairTrace swap_repair(PartialColoring& c, const Graph& g, const BunchStructure& bs, int t)
{
    const int d = bs.count();
    if (t < 2 || t > d)
        throw Error(ErrorCode::InvalidParameter, "bunch index " + std::to_string(t));
    const auto& members = bs.bunch(t);
    {
        std::vector<char> seen(static_cast<std::size_t>(d) + 1, 0);
        for (Vertex v : members) {
            const Color col = c[v];
            if (col < 1 || col > d || col == t || seen[static_cast<std::size_t>(col)])
                throw Error(ErrorCode::PreconditionViolated,
                            "bunch " + std::to_string(t) + " is not colored bijectively with [d] minus {t}");
            seen[static_cast<std::size_t>(col)] = 1;
        }
    }

    auto backward_neighbors = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex w : g.neighbors(v)) {
            const int b = bs.bunch_of(w);
            if (b != 0 && b < t)
                out.push_back(w);
        }
        return out;
    };

    RepairTrace trace;
    int current = backward_conflicts(c, g, bs, t);
    trace.counts.push_back(current);

    while (current > 0) {
        // First conflict in position order: (s, earlier endpoint).
        std::size_t s = 0;
        Vertex partner_of_s = -1;
        for (std::size_t p = 0; p < members.size() && partner_of_s < 0; ++p)
            for (Vertex w : backward_neighbors(members[p]))
                if (c[w] == c[members[p]]) {
                    s = p;
                    partner_of_s = w;
                    break;
                }
        const Color k = c[members[s]];
        const int conflict_bunch = bs.bunch_of(partner_of_s);

        // Candidate partners in rule order.
        std::vector<std::pair<char, std::size_t>> candidates;
        std::vector<std::vector<Vertex>> back(members.size());
        for (std::size_t p = 0; p < members.size(); ++p)
            back[p] = backward_neighbors(members[p]);

        for (std::size_t p = 0; p < members.size(); ++p)
            if (p != s && back[p].empty())
                candidates.emplace_back('a', p);
        for (std::size_t p = 0; p < members.size(); ++p)
            if (p != s && std::any_of(back[p].begin(), back[p].end(),
                                      [&](Vertex w) { return bs.bunch_of(w) == conflict_bunch; }))
                candidates.emplace_back('b', p);
        for (std::size_t p = 0; p < members.size(); ++p) {
            if (p == s || back[p].size() != 1)
                continue;
            const int shared = bs.bunch_of(back[p].front());
            if (shared == conflict_bunch)
                continue;
            for (std::size_t r = 0; r < members.size(); ++r) {
                if (r == s || r == p || back[r].size() != 1 || bs.bunch_of(back[r].front()) != shared)
                    continue;
                // Of the two, take the one whose earlier neighbor avoids k.
                if (c[back[p].front()] != k)
                    candidates.emplace_back('c', p);
                else if (c[back[r].front()] != k)
                    candidates.emplace_back('c', r);
            }
        }
        if (k <= d && k < t)
            for (std::size_t p = 0; p < members.size(); ++p)
                if (p != s && std::any_of(back[p].begin(), back[p].end(),
                                          [&](Vertex w) { return bs.bunch_of(w) == static_cast<int>(k); }))
                    candidates.emplace_back('d', p);

        bool swapped = false;
        for (auto [rule, p] : candidates) {
            const Color cp = c[members[p]];
            c.assign(members[p], k);
            c.assign(members[s], cp);
            const int next = backward_conflicts(c, g, bs, t);
            if (next < current) {
                current = next;
                trace.counts.push_back(current);
                trace.rules.push_back(rule);
                swapped = true;
                break;
            }
            c.assign(members[s], k);
            c.assign(members[p], cp);
        }
        if (!swapped)
            throw Error(ErrorCode::RepairStuck, "bunch " + std::to_string(t) + " of center " +
                                                    std::to_string(bs.center()) + " keeps " +
                                                    std::to_string(current) + " monochromatic edges");
    }
    return trace;
}

Certificate color_no_c6(const Graph& g, Vertex x)
{
    return color_no_c6(g, GraphFacts::of(g), x);
}

Certificate color_no_c6(const Graph& g, const GraphFacts& facts, Vertex x)
{
    require_vertex(g, x);
    const int d = detail::require_strategy_setting(facts, true);
    const long long cycles = count_c6_through_vertex(g, x);
    if (cycles != 0)
        throw Error(ErrorCode::PreconditionViolated,
                    "vertex " + std::to_string(x) + " lies on " + std::to_string(cycles) + " six-cycles");
    const auto degree = s2_degrees(g, x);
    for (std::size_t v = 0; v < degree.size(); ++v)
        if (degree[v] > 1)
            throw Error(ErrorCode::PreconditionViolated,
                        "vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]) + " inside S2(" +
                            std::to_string(x) + ")");

    const auto bs = bunches(g, x);
    auto c = seed_neighborhood(g, bs, d);
    for (int t = 2; t <= d; ++t) {
        Color next = 1;
        for (Vertex v : bs.bunch(t)) {
            if (next == t)
                ++next;
            c.assign(v, next++);
        }
        swap_repair(c, g, bs, t);
    }
    if (!is_proper(c, g))
        throw Error(ErrorCode::InternalInvariantViolation, "swap repair left a monochromatic edge");
    return detail::finish_neighbor_certificate(g, facts, c, bs, Strategy::NoC6);
}

std::vector<Vertex> order_by_degree_sequences(const Graph& g, Vertex x)
{
    require_local_girth5(g, x);
    const auto degree = s2_degrees(g, x);
    const auto bs = bunches(g, x);
    std::vector<std::pair<std::vector<int>, Vertex>> keyed;
    for (int t = 1; t <= bs.count(); ++t) {
        std::vector<int> seq;
        for (Vertex v : bs.bunch(t))
            seq.push_back(degree[idx(v)]);
        std::sort(seq.begin(), seq.end(), std::greater<>());
        keyed.emplace_back(std::move(seq), bs.neighbor(t));
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<Vertex> order;
    for (auto& entry : keyed)
        order.push_back(entry.second);
    return order;
}

Certificate color_bounded_c6(const Graph& g, Vertex x)
{
    return color_bounded_c6(g, GraphFacts::of(g), x);
}

Certificate color_bounded_c6(const Graph& g, const GraphFacts& facts, Vertex x)
{
    require_vertex(g, x);
    const int d = detail::require_strategy_setting(facts, true);
    const long long cycles = count_c6_in_n2(g, x);
    if (cycles > 5)
        throw Error(ErrorCode::PreconditionViolated, "vertex " + std::to_string(x) + " lies on " +
                                                         std::to_string(cycles) + " six-cycles inside G[N2[x]] (> 5)");
    const auto bs = bunches(g, x, order_by_degree_sequences(g, x));
    auto c = lemma_extension(g, facts, bs);
    for (int t = 5; t <= d; ++t)
        color_bunch_or_escalate(c, g, bs, t);
    return detail::finish_neighbor_certificate(g, facts, c, bs, Strategy::BoundedC6);
}

Certificate run_strategy(Strategy s, const Graph& g, const GraphFacts& facts, Vertex x)
{
    switch (s) {
    case Strategy::NoC6: return color_no_c6(g, facts, x);
    case Strategy::BoundedC6: return color_bounded_c6(g, facts, x);
    case Strategy::TwoBunch: return color_two_bunch(g, facts, x);
    }
    throw Error(ErrorCode::InvalidParameter, "unknown strategy");
}

} // namespace bchrome
