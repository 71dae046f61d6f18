#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bchrome {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Simple undirected graph on the dense vertex range 0..n-1.
///
/// Neighbor lists are kept sorted and duplicate-free, so `neighbors(v)` is the
/// set N(v) in ascending order. The graph is immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adjacency_(n) {}

    /// Throws SelfLoop / VertexOutOfRange. Repeated pairs collapse.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const;
    bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < order(); }

    /// Common degree if every vertex has it; nullopt otherwise (and for n = 0).
    std::optional<int> regular_degree() const;
    int max_degree() const;

    /// Edges as (u, v) with u < v in ascending order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

void require_vertex(const Graph& g, Vertex v);

/// Length of a shortest cycle; nullopt when the graph is acyclic.
std::optional<int> girth(const Graph& g);

/// Breadth-first distances from `source`; kUnreachable across components.
std::vector<int> distances(const Graph& g, Vertex source);

/// Vertices at distance exactly `radius` from `v`, ascending.
std::vector<Vertex> sphere(const Graph& g, Vertex v, int radius);

/// Vertices at distance at most `radius` from `v`, ascending.
std::vector<Vertex> ball(const Graph& g, Vertex v, int radius);

struct InducedSubgraph {
    Graph graph;
    /// old identifier -> new identifier, -1 for vertices outside the set.
    std::vector<Vertex> to_new;
    /// new identifier -> old identifier.
    std::vector<Vertex> to_old;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Bunches of a center vertex x under a fixed ordering x_1..x_d of N(x).
///
/// Bunch indices are 1-based throughout the library so that bunch t lines up
/// with color t in the constructions.
class BunchStructure {
public:
    BunchStructure() = default;
    BunchStructure(Vertex center, std::vector<Vertex> neighbor_order,
                   std::vector<std::vector<Vertex>> bunches, std::size_t n);

    Vertex center() const { return center_; }
    int count() const { return static_cast<int>(neighbor_order_.size()); }
    const std::vector<Vertex>& neighbor_order() const { return neighbor_order_; }

    /// x_t for t in 1..count().
    Vertex neighbor(int t) const { return neighbor_order_.at(static_cast<std::size_t>(t - 1)); }
    /// X_t for t in 1..count(), ascending identifiers unless built otherwise.
    const std::vector<Vertex>& bunch(int t) const { return bunches_.at(static_cast<std::size_t>(t - 1)); }

    /// Bunch index of v, or 0 when v lies in no bunch.
    int bunch_of(Vertex v) const;
    /// 0-based position of v inside its bunch, or -1.
    int position_of(Vertex v) const;

private:
    Vertex center_ = -1;
    std::vector<Vertex> neighbor_order_;
    std::vector<std::vector<Vertex>> bunches_;
    std::vector<int> bunch_of_;
    std::vector<int> position_of_;
};

/// Throws GirthTooSmall if two bunches overlap or a bunch meets N[x].
/// `neighbor_order`, when given, must be a permutation of N(x).
BunchStructure bunches(const Graph& g, Vertex x, std::optional<std::vector<Vertex>> neighbor_order = std::nullopt);

/// Neighbors of v lying in bunches with a smaller index. Throws NotInAnyBunch.
int backward_degree(const BunchStructure& bs, const Graph& g, Vertex v);

/// Degree of v inside G[S2(x)]. Throws NotInS2.
int s2_degree(const Graph& g, Vertex x, Vertex v);

/// Degrees inside G[S2(x)] for every vertex of S2(x); other entries are -1.
std::vector<int> s2_degrees(const Graph& g, Vertex x);

/// Six-cycles through x inside G[N2[x]], by summing C(p, 2) over the
/// S2-degrees p. Throws GirthTooSmall if G[N2[x]] has a cycle shorter than 5.
long long count_c6_in_n2(const Graph& g, Vertex x);

/// All six-cycles of g through x, counted by walking simple paths from x.
long long count_c6_through_vertex(const Graph& g, Vertex x);

/// Indices (under the ascending default order) of bunches whose vertices
/// have every neighbor inside N2(x).
std::vector<int> closed_bunches(const Graph& g, Vertex x);

/// Local girth guard used by the per-vertex queries.
void require_local_girth5(const Graph& g, Vertex x);

} // namespace bchrome
