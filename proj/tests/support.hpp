#pragma once

// Helpers shared by the unit and acceptance suites: small brute-force
// oracles and synthetic bunch configurations.

#include "bchrome/coloring.hpp"
#include "bchrome/generators.hpp"
#include "bchrome/graph.hpp"
#include "bchrome/oracle.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace bchrome::testing {

/// Six-cycles through x inside G[N2[x]], by enumeration on the induced graph.
inline long long brute_c6_in_n2(const Graph& g, Vertex x)
{
    const auto n2 = ball(g, x, 2);
    const auto sub = induced_subgraph(g, n2);
    return static_cast<long long>(enumerate_c6_through(sub.graph, sub.to_new[static_cast<std::size_t>(x)]).size());
}

/// Largest k with a b-coloring, by trying every assignment. Tiny graphs only.
inline int brute_b_chromatic(const Graph& g)
{
    const std::size_t n = g.order();
    int best = 0;
    for (int k = 1; k <= g.max_degree() + 1 && static_cast<std::size_t>(k) <= n; ++k) {
        std::vector<Color> colors(n, 1);
        bool found = false;
        while (!found) {
            PartialColoring c(k, colors);
            if (is_proper(c, g) && is_b_coloring(c, g))
                found = true;
            std::size_t i = 0;
            while (i < n && colors[i] == k)
                colors[i++] = 1;
            if (i == n)
                break;
            ++colors[i];
        }
        if (found)
            best = k;
    }
    return best;
}

/// Center 0, neighbors 1..d, bunch i on vertices d+1+(i-1)(d-1) .. , plus a
/// random matching between S2 vertices of distinct bunches. Every S2 vertex
/// has S2-degree at most one, as the no-C6 setting demands.
struct SyntheticBunches {
    Graph graph;
    int d = 0;
    std::size_t matching_edges = 0;
};

inline SyntheticBunches synthetic_no_c6(int d, double density, std::mt19937_64& rng)
{
    std::vector<Edge> edges;
    const int s2 = d * (d - 1);
    auto bunch_vertex = [d](int i, int j) { return static_cast<Vertex>(d + 1 + (i - 1) * (d - 1) + j); };
    for (int i = 1; i <= d; ++i) {
        edges.emplace_back(0, i);
        for (int j = 0; j < d - 1; ++j)
            edges.emplace_back(i, bunch_vertex(i, j));
    }
    std::vector<Vertex> pool;
    for (int v = d + 1; v < d + 1 + s2; ++v)
        pool.push_back(static_cast<Vertex>(v));
    std::shuffle(pool.begin(), pool.end(), rng);
    auto bunch_index = [d](Vertex v) { return (v - d - 1) / (d - 1) + 1; };
    std::bernoulli_distribution take(density);
    std::vector<char> used(static_cast<std::size_t>(d + 1 + s2), 0);
    std::size_t matched = 0;
    for (std::size_t a = 0; a < pool.size(); ++a) {
        if (used[static_cast<std::size_t>(pool[a])] || !take(rng))
            continue;
        for (std::size_t b = a + 1; b < pool.size(); ++b) {
            if (used[static_cast<std::size_t>(pool[b])] || bunch_index(pool[a]) == bunch_index(pool[b]))
                continue;
            edges.emplace_back(pool[a], pool[b]);
            used[static_cast<std::size_t>(pool[a])] = used[static_cast<std::size_t>(pool[b])] = 1;
            ++matched;
            break;
        }
    }
    return {Graph::from_edges(static_cast<std::size_t>(d + 1 + s2), edges), d, matched};
}

/// Corpus of small girth >= 5 graphs with degrees 3, 4 and 7.
inline std::vector<Graph> small_girth5_corpus()
{
    std::vector<Graph> corpus{petersen(), robertson(), hoffman_singleton()};
    for (int n = 12; n <= 60; n += 2)
        for (std::uint64_t seed = 1; seed <= 4; ++seed)
            corpus.push_back(random_regular_girth({Family::RandomRegular, 3, n, 5, seed, 20}));
    for (int n = 24; n <= 60; ++n)
        for (std::uint64_t seed = 1; seed <= 3; ++seed)
            corpus.push_back(random_regular_girth({Family::RandomRegular, 4, n, 5, seed, 20}));
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        corpus.push_back(relabel(hoffman_singleton(), seed));
    return corpus;
}

} // namespace bchrome::testing
