#include "bchrome/oracle.hpp"

#include "bchrome/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace bchrome {

std::string_view to_string(Outcome o)
{
    switch (o) {
    case Outcome::Yes: return "Yes";
    case Outcome::No: return "No";
    case Outcome::BudgetExceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

struct BudgetExhausted {};

class Budget {
public:
    explicit Budget(const SearchLimits& limits)
        : limits_(limits), deadline_(std::chrono::steady_clock::now() + limits.time_budget)
    {
    }

    void tick()
    {
        ++nodes_;
        if (nodes_ > limits_.node_budget)
            throw BudgetExhausted{};
        if ((nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline_)
            throw BudgetExhausted{};
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    SearchLimits limits_;
    std::chrono::steady_clock::time_point deadline_;
    std::uint64_t nodes_ = 0;
};

/// Coloring state with per-vertex counts of neighbors holding each color.
class ColorState {
public:
    ColorState(const Graph& g, int k)
        : g_(g), k_(k), color_(g.order(), 0), blocked_(g.order() * static_cast<std::size_t>(k + 1), 0)
    {
    }

    int k() const { return k_; }
    int color(Vertex v) const { return color_[idx(v)]; }
    bool allowed(Vertex v, int c) const { return blocked_[slot(v, c)] == 0; }

    int domain_size(Vertex v) const
    {
        int n = 0;
        for (int c = 1; c <= k_; ++c)
            n += allowed(v, c) ? 1 : 0;
        return n;
    }

    void assign(Vertex v, int c)
    {
        color_[idx(v)] = c;
        for (Vertex w : g_.neighbors(v))
            ++blocked_[slot(w, c)];
    }

    /// False if some uncolored neighbor of v has no color left.
    bool neighbors_colorable(Vertex v) const
    {
        for (Vertex w : g_.neighbors(v))
            if (color_[idx(w)] == 0 && domain_size(w) == 0)
                return false;
        return true;
    }

    void unassign(Vertex v)
    {
        const int c = color_[idx(v)];
        for (Vertex w : g_.neighbors(v))
            --blocked_[slot(w, c)];
        color_[idx(v)] = 0;
    }

    PartialColoring snapshot() const
    {
        PartialColoring out(g_.order(), static_cast<Color>(k_));
        for (std::size_t v = 0; v < color_.size(); ++v)
            if (color_[v] != 0)
                out.assign(static_cast<Vertex>(v), color_[v]);
        return out;
    }

private:
    std::size_t slot(Vertex v, int c) const { return idx(v) * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(c); }

    const Graph& g_;
    int k_;
    std::vector<int> color_;
    std::vector<int> blocked_;
};

/// Search for a b-coloring in which `anchors[i]` is a b-vertex of color i+1.
class AnchoredSearch {
public:
    AnchoredSearch(const Graph& g, int k, std::vector<Vertex> anchors, Budget& budget)
        : g_(g), k_(k), anchors_(std::move(anchors)), budget_(budget), state_(g, k), in_region_(g.order(), 0)
    {
        anchors_of_.resize(g.order());
        for (Vertex b : anchors_) {
            in_region_[idx(b)] = 1;
            for (Vertex w : g.neighbors(b)) {
                in_region_[idx(w)] = 1;
                anchors_of_[idx(w)].push_back(b);
            }
        }
        for (std::size_t v = 0; v < g.order(); ++v) {
            if (in_region_[v])
                region_.push_back(static_cast<Vertex>(v));
            else if (g.degree(static_cast<Vertex>(v)) >= k)
                core_.push_back(static_cast<Vertex>(v));
            else
                deferred_.push_back(static_cast<Vertex>(v));
        }
    }

    std::optional<PartialColoring> run()
    {
        for (std::size_t i = 0; i < anchors_.size(); ++i) {
            const int c = static_cast<int>(i + 1);
            if (!state_.allowed(anchors_[i], c))
                return std::nullopt;
            state_.assign(anchors_[i], c);
        }
        if (!anchors_feasible())
            return std::nullopt;
        if (!solve(region_) )
            return std::nullopt;
        return result_;
    }

private:
    // Matching of each anchor's missing colors into its uncolored neighbors.
    bool anchors_feasible() const
    {
        for (Vertex b : anchors_) {
            std::vector<char> present(static_cast<std::size_t>(k_) + 1, 0);
            std::vector<Vertex> open;
            present[static_cast<std::size_t>(state_.color(b))] = 1;
            for (Vertex w : g_.neighbors(b)) {
                if (state_.color(w) != 0)
                    present[static_cast<std::size_t>(state_.color(w))] = 1;
                else
                    open.push_back(w);
            }
            std::vector<int> missing;
            for (int c = 1; c <= k_; ++c)
                if (!present[static_cast<std::size_t>(c)])
                    missing.push_back(c);
            if (missing.size() > open.size())
                return false;
            std::vector<int> owner(open.size(), -1);
            std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t mi,
                                                                               std::vector<char>& seen) {
                for (std::size_t u = 0; u < open.size(); ++u) {
                    if (seen[u] || !state_.allowed(open[u], missing[mi]))
                        continue;
                    seen[u] = 1;
                    if (owner[u] < 0 || augment(static_cast<std::size_t>(owner[u]), seen)) {
                        owner[u] = static_cast<int>(mi);
                        return true;
                    }
                }
                return false;
            };
            for (std::size_t mi = 0; mi < missing.size(); ++mi) {
                std::vector<char> seen(open.size(), 0);
                if (!augment(mi, seen))
                    return false;
            }
        }
        return true;
    }

    // Allowed colors of v. An anchor whose open neighbors are exactly as
    // many as its missing colors forces those neighbors into the missing
    // set. Colors missing around more adjacent anchors come first.
    std::vector<int> domain(Vertex v) const
    {
        std::vector<int> wanted(static_cast<std::size_t>(k_) + 1, 0);
        std::vector<char> forbidden(static_cast<std::size_t>(k_) + 1, 0);
        for (Vertex b : anchors_of_[idx(v)]) {
            std::vector<char> present(static_cast<std::size_t>(k_) + 1, 0);
            present[static_cast<std::size_t>(state_.color(b))] = 1;
            std::size_t open = 0;
            for (Vertex w : g_.neighbors(b)) {
                present[static_cast<std::size_t>(state_.color(w))] = 1;
                open += state_.color(w) == 0 ? 1 : 0;
            }
            std::size_t missing = 0;
            for (int c = 1; c <= k_; ++c)
                if (!present[static_cast<std::size_t>(c)]) {
                    ++wanted[static_cast<std::size_t>(c)];
                    ++missing;
                }
            if (missing == open)
                for (int c = 1; c <= k_; ++c)
                    if (present[static_cast<std::size_t>(c)])
                        forbidden[static_cast<std::size_t>(c)] = 1;
        }
        std::vector<int> order;
        for (int c = 1; c <= k_; ++c)
            if (state_.allowed(v, c) && !forbidden[static_cast<std::size_t>(c)])
                order.push_back(c);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return wanted[static_cast<std::size_t>(a)] > wanted[static_cast<std::size_t>(b)];
        });
        return order;
    }

    bool solve(const std::vector<Vertex>& pool)
    {
        Vertex pick = -1;
        int best = k_ + 1;
        for (Vertex v : pool) {
            if (state_.color(v) != 0)
                continue;
            const int size = static_cast<int>(domain(v).size());
            if (size < best) {
                best = size;
                pick = v;
                if (size == 0)
                    return false;
            }
        }
        if (pick < 0) {
            if (&pool == &region_)
                return solve(core_);
            return finish();
        }
        for (int c : domain(pick)) {
            budget_.tick();
            state_.assign(pick, c);
            if (state_.neighbors_colorable(pick) && (&pool != &region_ || anchors_feasible()) && solve(pool))
                return true;
            state_.unassign(pick);
        }
        return false;
    }

    // Deferred vertices have fewer than k neighbors, so first fit succeeds.
    bool finish()
    {
        std::vector<Vertex> placed;
        for (Vertex v : deferred_) {
            int c = 1;
            while (c <= k_ && !state_.allowed(v, c))
                ++c;
            if (c > k_)
                throw Error(ErrorCode::InternalInvariantViolation, "deferred vertex without a free color");
            state_.assign(v, c);
            placed.push_back(v);
        }
        result_ = state_.snapshot();
        for (auto it = placed.rbegin(); it != placed.rend(); ++it)
            state_.unassign(*it);
        return true;
    }

    const Graph& g_;
    int k_;
    std::vector<Vertex> anchors_;
    Budget& budget_;
    ColorState state_;
    std::vector<char> in_region_;
    std::vector<std::vector<Vertex>> anchors_of_;
    std::vector<Vertex> region_;
    std::vector<Vertex> core_;
    std::vector<Vertex> deferred_;
    std::optional<PartialColoring> result_;
};

} // namespace

SearchResult b_coloring_exists(const Graph& g, int k, const SearchLimits& limits)
{
    if (k < 1)
        throw Error(ErrorCode::InvalidParameter, "k must be positive");
    SearchResult result;
    if (g.order() > limits.max_vertices) {
        result.outcome = Outcome::BudgetExceeded;
        return result;
    }
    if (static_cast<std::size_t>(k) > g.order()) {
        result.outcome = Outcome::No;
        return result;
    }

    std::vector<Vertex> candidates;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.degree(static_cast<Vertex>(v)) >= k - 1)
            candidates.push_back(static_cast<Vertex>(v));
    if (candidates.size() < static_cast<std::size_t>(k)) {
        result.outcome = Outcome::No;
        return result;
    }

    Budget budget(limits);
    // Colors are interchangeable, so the anchors (one b-vertex per class)
    // can be taken in ascending order with anchor i carrying color i.
    std::vector<std::size_t> pick(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < pick.size(); ++i)
        pick[i] = i;
    try {
        while (true) {
            std::vector<Vertex> anchors;
            for (std::size_t i : pick)
                anchors.push_back(candidates[i]);
            budget.tick();
            AnchoredSearch search(g, k, std::move(anchors), budget);
            if (auto witness = search.run()) {
                result.outcome = Outcome::Yes;
                result.witness = std::move(witness);
                result.nodes = budget.nodes();
                return result;
            }
            // Next k-subset in lexicographic order.
            std::size_t i = pick.size();
            while (i > 0 && pick[i - 1] == candidates.size() - pick.size() + (i - 1))
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < pick.size(); ++j)
                pick[j] = pick[j - 1] + 1;
        }
    } catch (const BudgetExhausted&) {
        result.outcome = Outcome::BudgetExceeded;
        result.nodes = budget.nodes();
        return result;
    }
    result.outcome = Outcome::No;
    result.nodes = budget.nodes();
    return result;
}

BChromaticResult exact_b_chromatic(const Graph& g, const SearchLimits& limits)
{
    BChromaticResult result;
    if (g.order() == 0)
        return result;
    for (int k = g.max_degree() + 1; k >= 1; --k) {
        auto probe = b_coloring_exists(g, k, limits);
        if (probe.outcome == Outcome::Yes) {
            result.value = k;
            result.witness = std::move(probe.witness);
            return result;
        }
        if (probe.outcome == Outcome::BudgetExceeded)
            result.exact = false;
    }
    return result;
}

namespace {

bool color_all(const Graph& g, ColorState& state, const std::vector<Vertex>& pool, Budget& budget)
{
    Vertex pick = -1;
    int best = state.k() + 1;
    for (Vertex v : pool) {
        if (state.color(v) != 0)
            continue;
        const int size = state.domain_size(v);
        if (size < best) {
            best = size;
            pick = v;
        }
    }
    if (pick < 0)
        return true;
    if (best == 0)
        return false;
    // Only one previously unused color needs trying.
    int highest_used = 0;
    for (Vertex v : pool)
        highest_used = std::max(highest_used, state.color(v));
    for (int c = 1; c <= std::min(state.k(), highest_used + 1); ++c) {
        if (!state.allowed(pick, c))
            continue;
        budget.tick();
        state.assign(pick, c);
        if (state.neighbors_colorable(pick) && color_all(g, state, pool, budget))
            return true;
        state.unassign(pick);
    }
    return false;
}

} // namespace

std::optional<int> chromatic_number(const Graph& g, const SearchLimits& limits)
{
    if (g.order() == 0)
        return 0;
    if (g.order() > limits.max_vertices)
        return std::nullopt;
    Budget budget(limits);
    std::vector<Vertex> all(g.order());
    for (std::size_t v = 0; v < g.order(); ++v)
        all[v] = static_cast<Vertex>(v);
    try {
        for (int k = 1; k <= g.max_degree() + 1; ++k) {
            ColorState state(g, k);
            if (color_all(g, state, all, budget))
                return k;
        }
    } catch (const BudgetExhausted&) {
        return std::nullopt;
    }
    return g.max_degree() + 1;
}

namespace {

SixCycle canonical(const SixCycle& cycle)
{
    SixCycle best = cycle;
    for (int dir = 0; dir < 2; ++dir)
        for (int shift = 0; shift < 6; ++shift) {
            SixCycle candidate;
            for (int i = 0; i < 6; ++i) {
                const int j = dir == 0 ? (shift + i) % 6 : (shift - i + 6) % 6;
                candidate[static_cast<std::size_t>(i)] = cycle[static_cast<std::size_t>(j)];
            }
            best = std::min(best, candidate);
        }
    return best;
}

} // namespace

std::vector<SixCycle> enumerate_c6_through(const Graph& g, Vertex x)
{
    require_vertex(g, x);
    std::set<SixCycle> found;
    SixCycle path{};
    path[0] = x;
    std::vector<char> used(g.order(), 0);
    used[idx(x)] = 1;
    std::function<void(int)> walk = [&](int depth) {
        const Vertex tip = path[static_cast<std::size_t>(depth - 1)];
        if (depth == 6) {
            if (g.adjacent(tip, x))
                found.insert(canonical(path));
            return;
        }
        for (Vertex w : g.neighbors(tip)) {
            if (used[idx(w)])
                continue;
            used[idx(w)] = 1;
            path[static_cast<std::size_t>(depth)] = w;
            walk(depth + 1);
            used[idx(w)] = 0;
        }
    };
    walk(1);
    return {found.begin(), found.end()};
}

std::optional<std::vector<Color>> transversal_backtrack(const SetFamily& family)
{
    if (family.sets.size() > 10)
        throw Error(ErrorCode::FamilyTooLarge, std::to_string(family.sets.size()) + " sets (limit 10)");
    std::vector<Color> choice(family.sets.size(), kUncolored);
    std::set<Color> taken;
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
        if (i == family.sets.size())
            return true;
        for (Color c : family.sets[i]) {
            if (taken.count(c))
                continue;
            taken.insert(c);
            choice[i] = c;
            if (place(i + 1))
                return true;
            taken.erase(c);
        }
        return false;
    };
    if (!place(0))
        return std::nullopt;
    return choice;
}

} // namespace bchrome
