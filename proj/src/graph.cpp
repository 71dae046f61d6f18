#include "bchrome/graph.hpp"

#include "bchrome/error.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace bchrome {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Bounded BFS; entries beyond `radius` stay kUnreachable.
std::vector<int> bounded_distances(const Graph& g, Vertex source, int radius)
{
    std::vector<int> dist(g.order(), kUnreachable);
    std::queue<Vertex> frontier;
    dist[idx(source)] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        Vertex u = frontier.front();
        frontier.pop();
        if (dist[idx(u)] == radius)
            continue;
        for (Vertex w : g.neighbors(u)) {
            if (dist[idx(w)] == kUnreachable) {
                dist[idx(w)] = dist[idx(u)] + 1;
                frontier.push(w);
            }
        }
    }
    return dist;
}

} // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges)
{
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || idx(u) >= n || idx(v) >= n)
            throw Error(ErrorCode::VertexOutOfRange,
                        "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") with n = " + std::to_string(n));
        if (u == v)
            throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
        g.adjacency_[idx(u)].push_back(v);
        g.adjacency_[idx(v)].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        degree_sum += list.size();
    }
    g.edge_count_ = degree_sum / 2;
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto& list = adjacency_[idx(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::optional<int> Graph::regular_degree() const
{
    if (adjacency_.empty())
        return std::nullopt;
    const std::size_t d = adjacency_.front().size();
    for (const auto& list : adjacency_)
        if (list.size() != d)
            return std::nullopt;
    return static_cast<int>(d);
}

int Graph::max_degree() const
{
    std::size_t best = 0;
    for (const auto& list : adjacency_)
        best = std::max(best, list.size());
    return static_cast<int>(best);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
        for (Vertex v : adjacency_[u])
            if (idx(v) > u)
                out.emplace_back(static_cast<Vertex>(u), v);
    return out;
}

void require_vertex(const Graph& g, Vertex v)
{
    if (!g.contains(v))
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " with n = " + std::to_string(g.order()));
}

std::optional<int> girth(const Graph& g)
{
    const std::size_t n = g.order();
    int best = kUnreachable;
    std::vector<int> dist(n);
    std::vector<Vertex> parent(n);
    for (std::size_t root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        std::queue<Vertex> frontier;
        dist[root] = 0;
        parent[root] = -1;
        frontier.push(static_cast<Vertex>(root));
        while (!frontier.empty()) {
            Vertex u = frontier.front();
            frontier.pop();
            if (best != kUnreachable && 2 * dist[idx(u)] + 1 >= best)
                break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[idx(w)] == kUnreachable) {
                    dist[idx(w)] = dist[idx(u)] + 1;
                    parent[idx(w)] = u;
                    frontier.push(w);
                } else if (w != parent[idx(u)]) {
                    best = std::min(best, dist[idx(u)] + dist[idx(w)] + 1);
                }
            }
        }
    }
    if (best == kUnreachable)
        return std::nullopt;
    return best;
}

std::vector<int> distances(const Graph& g, Vertex source)
{
    require_vertex(g, source);
    return bounded_distances(g, source, kUnreachable);
}

std::vector<Vertex> sphere(const Graph& g, Vertex v, int radius)
{
    require_vertex(g, v);
    auto dist = bounded_distances(g, v, radius);
    std::vector<Vertex> out;
    for (std::size_t u = 0; u < dist.size(); ++u)
        if (dist[u] == radius)
            out.push_back(static_cast<Vertex>(u));
    return out;
}

std::vector<Vertex> ball(const Graph& g, Vertex v, int radius)
{
    require_vertex(g, v);
    auto dist = bounded_distances(g, v, radius);
    std::vector<Vertex> out;
    for (std::size_t u = 0; u < dist.size(); ++u)
        if (dist[u] <= radius)
            out.push_back(static_cast<Vertex>(u));
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    InducedSubgraph result;
    result.to_new.assign(g.order(), -1);
    for (Vertex v : vertices) {
        require_vertex(g, v);
        if (result.to_new[idx(v)] != -1)
            continue;
        result.to_new[idx(v)] = static_cast<Vertex>(result.to_old.size());
        result.to_old.push_back(v);
    }
    std::vector<Edge> edges;
    for (Vertex old_u : result.to_old)
        for (Vertex old_w : g.neighbors(old_u))
            if (old_u < old_w && result.to_new[idx(old_w)] != -1)
                edges.emplace_back(result.to_new[idx(old_u)], result.to_new[idx(old_w)]);
    result.graph = Graph::from_edges(result.to_old.size(), edges);
    return result;
}

BunchStructure::BunchStructure(Vertex center, std::vector<Vertex> neighbor_order,
                               std::vector<std::vector<Vertex>> bunches, std::size_t n)
    : center_(center),
      neighbor_order_(std::move(neighbor_order)),
      bunches_(std::move(bunches)),
      bunch_of_(n, 0),
      position_of_(n, -1)
{
    for (std::size_t i = 0; i < bunches_.size(); ++i) {
        for (std::size_t j = 0; j < bunches_[i].size(); ++j) {
            Vertex v = bunches_[i][j];
            bunch_of_[idx(v)] = static_cast<int>(i + 1);
            position_of_[idx(v)] = static_cast<int>(j);
        }
    }
}

int BunchStructure::bunch_of(Vertex v) const
{
    if (v < 0 || idx(v) >= bunch_of_.size())
        return 0;
    return bunch_of_[idx(v)];
}

int BunchStructure::position_of(Vertex v) const
{
    if (v < 0 || idx(v) >= position_of_.size())
        return -1;
    return position_of_[idx(v)];
}

BunchStructure bunches(const Graph& g, Vertex x, std::optional<std::vector<Vertex>> neighbor_order)
{
    require_vertex(g, x);
    std::vector<Vertex> order;
    const auto nbrs = g.neighbors(x);
    if (neighbor_order) {
        order = std::move(*neighbor_order);
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (!std::equal(sorted.begin(), sorted.end(), nbrs.begin(), nbrs.end()))
            throw Error(ErrorCode::InvalidParameter, "neighbor order is not a permutation of N(" + std::to_string(x) + ")");
    } else {
        order.assign(nbrs.begin(), nbrs.end());
    }

    std::vector<char> owned(g.order(), 0);
    owned[idx(x)] = 1;
    for (Vertex xi : order)
        owned[idx(xi)] = 1;

    std::vector<std::vector<Vertex>> result;
    result.reserve(order.size());
    for (Vertex xi : order) {
        std::vector<Vertex> bunch;
        for (Vertex v : g.neighbors(xi)) {
            if (v == x)
                continue;
            if (owned[idx(v)])
                throw Error(ErrorCode::GirthTooSmall,
                            "vertex " + std::to_string(v) + " is shared by two bunches of " + std::to_string(x));
            owned[idx(v)] = 1;
            bunch.push_back(v);
        }
        result.push_back(std::move(bunch));
    }
    return BunchStructure(x, std::move(order), std::move(result), g.order());
}

int backward_degree(const BunchStructure& bs, const Graph& g, Vertex v)
{
    const int home = bs.bunch_of(v);
    if (home == 0)
        throw Error(ErrorCode::NotInAnyBunch, "vertex " + std::to_string(v));
    int count = 0;
    for (Vertex w : g.neighbors(v)) {
        const int other = bs.bunch_of(w);
        if (other != 0 && other < home)
            ++count;
    }
    return count;
}

std::vector<int> s2_degrees(const Graph& g, Vertex x)
{
    require_vertex(g, x);
    auto dist = bounded_distances(g, x, 2);
    std::vector<int> degree(g.order(), -1);
    for (std::size_t v = 0; v < dist.size(); ++v) {
        if (dist[v] != 2)
            continue;
        int count = 0;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
            if (dist[idx(w)] == 2)
                ++count;
        degree[v] = count;
    }
    return degree;
}

int s2_degree(const Graph& g, Vertex x, Vertex v)
{
    require_vertex(g, v);
    auto degree = s2_degrees(g, x);
    if (degree[idx(v)] < 0)
        throw Error(ErrorCode::NotInS2, "vertex " + std::to_string(v) + " is not at distance 2 from " + std::to_string(x));
    return degree[idx(v)];
}

void require_local_girth5(const Graph& g, Vertex x)
{
    auto region = ball(g, x, 2);
    auto local = induced_subgraph(g, region);
    auto gl = girth(local.graph);
    if (gl && *gl < 5)
        throw Error(ErrorCode::GirthTooSmall,
                    "G[N2[" + std::to_string(x) + "]] has a cycle of length " + std::to_string(*gl));
}

long long count_c6_in_n2(const Graph& g, Vertex x)
{
    require_local_girth5(g, x);
    long long total = 0;
    for (int p : s2_degrees(g, x))
        if (p > 1)
            total += static_cast<long long>(p) * (p - 1) / 2;
    return total;
}

namespace {

long long extend_paths(const Graph& g, Vertex x, Vertex tip, int length, std::vector<char>& on_path)
{
    if (length == 5)
        return g.adjacent(tip, x) ? 1 : 0;
    long long count = 0;
    for (Vertex w : g.neighbors(tip)) {
        if (on_path[idx(w)])
            continue;
        on_path[idx(w)] = 1;
        count += extend_paths(g, x, w, length + 1, on_path);
        on_path[idx(w)] = 0;
    }
    return count;
}

} // namespace

long long count_c6_through_vertex(const Graph& g, Vertex x)
{
    require_vertex(g, x);
    std::vector<char> on_path(g.order(), 0);
    on_path[idx(x)] = 1;
    // Every cycle is walked once in each direction.
    return extend_paths(g, x, x, 0, on_path) / 2;
}

std::vector<int> closed_bunches(const Graph& g, Vertex x)
{
    auto bs = bunches(g, x);
    auto dist = bounded_distances(g, x, 2);
    std::vector<int> closed;
    for (int t = 1; t <= bs.count(); ++t) {
        bool all_inside = true;
        for (Vertex v : bs.bunch(t)) {
            for (Vertex w : g.neighbors(v)) {
                if (w == x || dist[idx(w)] > 2) {
                    all_inside = false;
                    break;
                }
            }
            if (!all_inside)
                break;
        }
        if (all_inside)
            closed.push_back(t);
    }
    return closed;
}

} // namespace bchrome
