#include "bchrome/transversal.hpp"

#include "bchrome/error.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace bchrome {

namespace {

struct Matcher {
    const SetFamily& family;
    std::vector<int> owner;   // color -> index, -1 if free
    std::vector<char> visited; // per color, reset per augmentation

    bool augment(int i)
    {
        for (Color c : family.sets[static_cast<std::size_t>(i)]) {
            auto slot = static_cast<std::size_t>(c);
            if (visited[slot])
                continue;
            visited[slot] = 1;
            if (owner[slot] < 0 || augment(owner[slot])) {
                owner[slot] = i;
                return true;
            }
        }
        return false;
    }
};

} // namespace

TransversalResult find_transversal(const SetFamily& family)
{
    const auto s = family.sets.size();
    for (const auto& set : family.sets)
        for (Color c : set)
            if (c < 1 || c > family.universe)
                throw Error(ErrorCode::InvalidParameter, "element " + std::to_string(c) + " outside the universe");

    // Sorted copies keep the ascending scan independent of the input order.
    SetFamily sorted = family;
    for (auto& set : sorted.sets) {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
    }

    const auto slots = static_cast<std::size_t>(family.universe) + 1;
    Matcher m{sorted, std::vector<int>(slots, -1), std::vector<char>(slots, 0)};
    int unmatched = -1;
    for (std::size_t i = 0; i < s; ++i) {
        std::fill(m.visited.begin(), m.visited.end(), 0);
        if (!m.augment(static_cast<int>(i)) && unmatched < 0)
            unmatched = static_cast<int>(i);
    }

    TransversalResult result;
    if (unmatched < 0) {
        std::vector<Color> assignment(s, kUncolored);
        for (std::size_t c = 1; c < slots; ++c)
            if (m.owner[c] >= 0)
                assignment[static_cast<std::size_t>(m.owner[c])] = static_cast<Color>(c);
        result.assignment = std::move(assignment);
        return result;
    }

    // Indices reachable from the unmatched one by alternating paths. Every
    // color they reach is matched back into the set, so the union is one
    // short of the index count.
    std::vector<char> seen_index(s, 0);
    std::vector<char> seen_color(slots, 0);
    std::queue<int> frontier;
    seen_index[static_cast<std::size_t>(unmatched)] = 1;
    frontier.push(unmatched);
    while (!frontier.empty()) {
        int i = frontier.front();
        frontier.pop();
        for (Color c : sorted.sets[static_cast<std::size_t>(i)]) {
            auto slot = static_cast<std::size_t>(c);
            if (seen_color[slot])
                continue;
            seen_color[slot] = 1;
            int next = m.owner[slot];
            if (next >= 0 && !seen_index[static_cast<std::size_t>(next)]) {
                seen_index[static_cast<std::size_t>(next)] = 1;
                frontier.push(next);
            }
        }
    }
    for (std::size_t i = 0; i < s; ++i)
        if (seen_index[i])
            result.violator.push_back(static_cast<int>(i));
    return result;
}

std::size_t union_size(const SetFamily& family, const std::vector<int>& indices)
{
    std::set<Color> all;
    for (int i : indices)
        all.insert(family.sets.at(static_cast<std::size_t>(i)).begin(), family.sets.at(static_cast<std::size_t>(i)).end());
    return all.size();
}

SetFamily build_bunch_lists(const PartialColoring& c, const Graph& g, const BunchStructure& bs, int t)
{
    if (t < 1 || t > bs.count())
        throw Error(ErrorCode::InvalidParameter, "bunch index " + std::to_string(t));
    for (int earlier = 1; earlier < t; ++earlier)
        for (Vertex v : bs.bunch(earlier))
            if (!c.is_colored(v))
                throw Error(ErrorCode::PreconditionViolated,
                            "bunch " + std::to_string(earlier) + " is not fully colored before bunch " + std::to_string(t));

    const Color d = static_cast<Color>(bs.count());
    SetFamily family;
    family.universe = d;
    for (Vertex v : bs.bunch(t)) {
        if (c.is_colored(v))
            throw Error(ErrorCode::BunchAlreadyColored, "vertex " + std::to_string(v) + " of bunch " + std::to_string(t));
        std::vector<char> blocked(static_cast<std::size_t>(std::max(d, c.k())) + 1, 0);
        blocked[static_cast<std::size_t>(t)] = 1;
        for (Vertex w : g.neighbors(v))
            blocked[static_cast<std::size_t>(c[w])] = 1;
        std::vector<Color> list;
        for (Color col = 1; col <= d; ++col)
            if (!blocked[static_cast<std::size_t>(col)])
                list.push_back(col);
        family.sets.push_back(std::move(list));
    }
    return family;
}

void color_bunch(PartialColoring& c, const Graph& g, const BunchStructure& bs, int t)
{
    auto family = build_bunch_lists(c, g, bs, t);
    auto result = find_transversal(family);
    if (!result.found())
        throw HallFailure("bunch " + std::to_string(t) + " of center " + std::to_string(bs.center()) +
                              " admits no system of distinct colors",
                          result.violator);
    const auto& members = bs.bunch(t);
    for (std::size_t j = 0; j < members.size(); ++j)
        c.assign_proper(g, members[j], (*result.assignment)[j]);
}

} // namespace bchrome
