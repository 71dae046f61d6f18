#include "bchrome/generators.hpp"

#include "bchrome/error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

namespace bchrome {

std::optional<Family> parse_family(std::string_view name)
{
    if (name == "petersen")
        return Family::Petersen;
    if (name == "cycle")
        return Family::Cycle;
    if (name == "hoffman-singleton" || name == "hoffman_singleton")
        return Family::HoffmanSingleton;
    if (name == "robertson")
        return Family::Robertson;
    if (name == "random-regular" || name == "random_regular")
        return Family::RandomRegular;
    return std::nullopt;
}

std::string_view to_string(Family f)
{
    switch (f) {
    case Family::Petersen: return "petersen";
    case Family::Cycle: return "cycle";
    case Family::HoffmanSingleton: return "hoffman-singleton";
    case Family::Robertson: return "robertson";
    case Family::RandomRegular: return "random-regular";
    }
    return "unknown";
}

Graph petersen()
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, edges);
}

Graph hoffman_singleton()
{
    auto pentagon = [](int h, int j) { return static_cast<Vertex>(5 * h + j); };
    auto pentagram = [](int i, int j) { return static_cast<Vertex>(25 + 5 * i + j); };
    std::vector<Edge> edges;
    for (int h = 0; h < 5; ++h)
        for (int j = 0; j < 5; ++j) {
            edges.emplace_back(pentagon(h, j), pentagon(h, (j + 1) % 5));
            edges.emplace_back(pentagram(h, j), pentagram(h, (j + 2) % 5));
            for (int i = 0; i < 5; ++i)
                edges.emplace_back(pentagon(h, j), pentagram(i, (h * i + j) % 5));
        }
    return Graph::from_edges(50, edges);
}

Graph robertson()
{
    constexpr int chords[19] = {8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4};
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 19; ++i) {
        edges.emplace_back(i, (i + 1) % 19);
        edges.emplace_back(i, (i + chords[i]) % 19);
    }
    return Graph::from_edges(19, edges);
}

Graph cycle(int n)
{
    if (n < 3)
        throw Error(ErrorCode::InvalidParameter, "cycle needs at least 3 vertices, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

namespace {

/// Multigraph under repair: a flat edge list plus adjacency multisets.
class PairingRepair {
public:
    PairingRepair(int n, int girth_min, std::mt19937_64& rng) : n_(n), girth_min_(girth_min), rng_(rng), adj_(n) {}

    void pair_stubs(int d)
    {
        std::vector<Vertex> stubs;
        for (Vertex v = 0; v < n_; ++v)
            for (int i = 0; i < d; ++i)
                stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng_);
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2)
            add({stubs[i], stubs[i + 1]});
    }

    /// Returns true once no edge lies on a short cycle.
    bool repair(int swap_budget)
    {
        std::vector<std::size_t> bad;
        for (std::size_t e = 0; e < edges_.size(); ++e)
            if (on_short_cycle(e))
                bad.push_back(e);
        int swaps = 0;
        while (!bad.empty()) {
            if (swaps++ > swap_budget)
                return false;
            std::uniform_int_distribution<std::size_t> pick_bad(0, bad.size() - 1);
            const std::size_t slot = pick_bad(rng_);
            const std::size_t e = bad[slot];
            if (!on_short_cycle(e)) {
                bad[slot] = bad.back();
                bad.pop_back();
                continue;
            }
            try_swap(e);
            // The swap may have rewired e itself; re-test lazily next round.
            if (bad.size() > 4 * edges_.size())
                bad.resize(edges_.size());
            if (!on_short_cycle(bad[slot] < edges_.size() ? bad[slot] : 0)) {
                bad[slot] = bad.back();
                bad.pop_back();
            }
            rescan_recent(bad);
        }
        return true;
    }

    Graph to_graph() const { return Graph::from_edges(static_cast<std::size_t>(n_), edges_); }

private:
    void add(Edge e)
    {
        edges_.push_back(e);
        adj_[static_cast<std::size_t>(e.first)].push_back(e.second);
        adj_[static_cast<std::size_t>(e.second)].push_back(e.first);
    }

    void unlink(Vertex u, Vertex v)
    {
        auto& a = adj_[static_cast<std::size_t>(u)];
        a.erase(std::find(a.begin(), a.end(), v));
        auto& b = adj_[static_cast<std::size_t>(v)];
        b.erase(std::find(b.begin(), b.end(), u));
    }

    void link(Vertex u, Vertex v)
    {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }

    int multiplicity(Vertex u, Vertex v) const
    {
        const auto& a = adj_[static_cast<std::size_t>(u)];
        return static_cast<int>(std::count(a.begin(), a.end(), v));
    }

    /// Loop, parallel edge, or a path of length <= girth_min - 2 between the
    /// endpoints that avoids the edge itself.
    bool on_short_cycle(std::size_t e) const
    {
        const auto [u, v] = edges_[e];
        if (u == v)
            return girth_min_ > 1;
        if (multiplicity(u, v) > 1)
            return girth_min_ > 2;
        const int limit = girth_min_ - 2;
        if (limit < 2)
            return false;
        std::vector<std::pair<Vertex, int>> frontier{{u, 0}};
        std::vector<Vertex> seen{u};
        for (std::size_t head = 0; head < frontier.size(); ++head) {
            const auto [w, dist] = frontier[head];
            if (dist == limit)
                continue;
            for (Vertex z : adj_[static_cast<std::size_t>(w)]) {
                if (w == u && z == v)
                    continue;
                if (z == v)
                    return true;
                if (std::find(seen.begin(), seen.end(), z) != seen.end())
                    continue;
                seen.push_back(z);
                frontier.emplace_back(z, dist + 1);
            }
        }
        return false;
    }

    void try_swap(std::size_t e)
    {
        std::uniform_int_distribution<std::size_t> pick(0, edges_.size() - 1);
        std::bernoulli_distribution flip(0.5);
        for (int attempt = 0; attempt < 50; ++attempt) {
            const std::size_t f = pick(rng_);
            if (f == e)
                continue;
            auto [u, v] = edges_[e];
            auto [a, b] = edges_[f];
            if (flip(rng_))
                std::swap(a, b);
            // Rewire {u,v},{a,b} into {u,a},{v,b}.
            if (u == a || v == b)
                continue;
            if (multiplicity(u, a) > 0 || multiplicity(v, b) > 0)
                continue;
            unlink(u, v);
            unlink(edges_[f].first, edges_[f].second);
            link(u, a);
            link(v, b);
            const Edge old_e = edges_[e];
            const Edge old_f = edges_[f];
            edges_[e] = {u, a};
            edges_[f] = {v, b};
            if (!on_short_cycle(e) && !on_short_cycle(f)) {
                recent_ = {e, f};
                return;
            }
            unlink(u, a);
            unlink(v, b);
            link(old_e.first, old_e.second);
            link(old_f.first, old_f.second);
            edges_[e] = old_e;
            edges_[f] = old_f;
        }
        recent_.clear();
    }

    void rescan_recent(std::vector<std::size_t>& bad)
    {
        for (std::size_t e : recent_)
            if (on_short_cycle(e))
                bad.push_back(e);
        recent_.clear();
    }

    int n_;
    int girth_min_;
    std::mt19937_64& rng_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> recent_;
};

} // namespace

Graph random_regular_girth(const GenSpec& spec)
{
    if (spec.n < 1 || spec.d < 0 || spec.d >= spec.n)
        throw Error(ErrorCode::InvalidParameter, "need 0 <= d < n");
    if ((static_cast<long long>(spec.n) * spec.d) % 2 != 0)
        throw Error(ErrorCode::InvalidParameter, "n*d must be even");
    if (spec.girth_min > 5)
        throw Error(ErrorCode::InvalidParameter, "girth_min above 5 is not supported");
    if (spec.max_attempts < 1)
        throw Error(ErrorCode::InvalidParameter, "max_attempts must be positive");

    std::mt19937_64 rng(spec.seed);
    const int swap_budget = 10 * spec.n * std::max(spec.d, 1) + 1000;
    for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
        PairingRepair repair(spec.n, spec.girth_min, rng);
        repair.pair_stubs(spec.d);
        if (!repair.repair(swap_budget))
            continue;
        auto g = repair.to_graph();
        auto gg = girth(g);
        if (g.regular_degree() == spec.d && (!gg || *gg >= spec.girth_min))
            return g;
    }
    throw Error(ErrorCode::GenerationFailed, std::to_string(spec.max_attempts) + " attempts");
}

Graph generate(const GenSpec& spec)
{
    switch (spec.family) {
    case Family::Petersen: return petersen();
    case Family::Cycle: return cycle(spec.n);
    case Family::HoffmanSingleton: return hoffman_singleton();
    case Family::Robertson: return robertson();
    case Family::RandomRegular: return random_regular_girth(spec);
    }
    throw Error(ErrorCode::InvalidParameter, "unknown family");
}

Graph relabel(const Graph& g, std::uint64_t seed)
{
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph::from_edges(g.order(), edges);
}

} // namespace bchrome
