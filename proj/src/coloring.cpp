#include "bchrome/coloring.hpp"

#include "bchrome/error.hpp"

#include <algorithm>

namespace bchrome {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Bit i set when color i occurs in N[v]; bit 0 is the uncolored sentinel.
std::vector<char> colors_seen(const PartialColoring& c, const Graph& g, Vertex v)
{
    std::vector<char> seen(static_cast<std::size_t>(c.k()) + 1, 0);
    seen[static_cast<std::size_t>(c[v])] = 1;
    for (Vertex w : g.neighbors(v))
        seen[static_cast<std::size_t>(c[w])] = 1;
    return seen;
}

} // namespace

bool PartialColoring::is_total() const
{
    return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == kUncolored; });
}

void PartialColoring::assign(Vertex v, Color c)
{
    if (c < 1 || c > k_)
        throw Error(ErrorCode::InvalidParameter, "color " + std::to_string(c) + " outside [1, " + std::to_string(k_) + "]");
    colors_[idx(v)] = c;
}

void PartialColoring::assign_proper(const Graph& g, Vertex v, Color c)
{
    for (Vertex w : g.neighbors(v))
        if ((*this)[w] == c)
            throw Error(ErrorCode::InternalInvariantViolation,
                        "coloring " + std::to_string(v) + " with " + std::to_string(c) + " clashes with neighbor " +
                            std::to_string(w));
    assign(v, c);
}

std::vector<Color> available_colors(const PartialColoring& c, const Graph& g, Vertex v)
{
    require_vertex(g, v);
    auto seen = colors_seen(c, g, v);
    std::vector<Color> out;
    for (Color col = 1; col <= c.k(); ++col)
        if (!seen[static_cast<std::size_t>(col)])
            out.push_back(col);
    return out;
}

bool is_proper(const PartialColoring& c, const Graph& g)
{
    for (auto [u, v] : g.edges())
        if (c[u] != kUncolored && c[u] == c[v])
            return false;
    return true;
}

bool is_b_vertex(const PartialColoring& c, const Graph& g, Vertex v)
{
    if (!c.is_colored(v))
        return false;
    auto seen = colors_seen(c, g, v);
    return std::all_of(seen.begin() + 1, seen.end(), [](char s) { return s != 0; });
}

std::vector<Vertex> b_vertices(const PartialColoring& c, const Graph& g)
{
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (is_b_vertex(c, g, static_cast<Vertex>(v)))
            out.push_back(static_cast<Vertex>(v));
    return out;
}

bool is_b_coloring(const PartialColoring& c, const Graph& g)
{
    if (!c.is_total())
        throw Error(ErrorCode::NotTotal, "b-coloring check needs every vertex colored");
    if (!is_proper(c, g))
        return false;
    std::vector<char> used(static_cast<std::size_t>(c.k()) + 1, 0);
    std::vector<char> witnessed(static_cast<std::size_t>(c.k()) + 1, 0);
    for (std::size_t v = 0; v < g.order(); ++v) {
        const auto col = static_cast<std::size_t>(c[static_cast<Vertex>(v)]);
        used[col] = 1;
        if (!witnessed[col] && is_b_vertex(c, g, static_cast<Vertex>(v)))
            witnessed[col] = 1;
    }
    for (std::size_t col = 1; col < used.size(); ++col)
        if (!used[col] || !witnessed[col])
            return false;
    return true;
}

void greedy_complete(PartialColoring& c, const Graph& g, std::optional<std::vector<Vertex>> order)
{
    std::vector<Vertex> sequence;
    if (order) {
        sequence = std::move(*order);
    } else {
        sequence.resize(g.order());
        for (std::size_t v = 0; v < g.order(); ++v)
            sequence[v] = static_cast<Vertex>(v);
    }
    for (Vertex v : sequence) {
        require_vertex(g, v);
        if (c.is_colored(v))
            continue;
        auto free = available_colors(c, g, v);
        if (free.empty())
            throw Error(ErrorCode::CompletionFailed, "no color left for vertex " + std::to_string(v));
        c.assign_proper(g, v, free.front());
    }
    // Vertices missing from a custom order still need a color.
    if (order) {
        for (std::size_t v = 0; v < g.order(); ++v) {
            if (c.is_colored(static_cast<Vertex>(v)))
                continue;
            auto free = available_colors(c, g, static_cast<Vertex>(v));
            if (free.empty())
                throw Error(ErrorCode::CompletionFailed, "no color left for vertex " + std::to_string(v));
            c.assign_proper(g, static_cast<Vertex>(v), free.front());
        }
    }
}

GraphFingerprint fingerprint(const Graph& g)
{
    return GraphFingerprint{g.order(), g.size(), g.regular_degree(), girth(g)};
}

std::string_view to_string(RejectReason reason)
{
    switch (reason) {
    case RejectReason::None: return "None";
    case RejectReason::FingerprintMismatch: return "FingerprintMismatch";
    case RejectReason::WrongLength: return "WrongLength";
    case RejectReason::NotTotal: return "NotTotal";
    case RejectReason::ColorOutOfRange: return "ColorOutOfRange";
    case RejectReason::ImproperEdge: return "ImproperEdge";
    case RejectReason::EmptyClass: return "EmptyClass";
    case RejectReason::MissingBVertex: return "MissingBVertex";
    case RejectReason::WrongClass: return "WrongClass";
    case RejectReason::NotABVertex: return "NotABVertex";
    }
    return "Unknown";
}

Verdict verify_certificate(const Certificate& cert, const Graph& g)
{
    auto reject = [](RejectReason reason, std::string detail) { return Verdict{false, reason, std::move(detail)}; };

    if (cert.k < 1)
        return reject(RejectReason::ColorOutOfRange, "k must be positive");
    if (!(cert.graph == fingerprint(g)))
        return reject(RejectReason::FingerprintMismatch, "certificate was issued for a different graph");
    if (cert.colors.size() != g.order())
        return reject(RejectReason::WrongLength,
                      std::to_string(cert.colors.size()) + " colors for " + std::to_string(g.order()) + " vertices");
    for (std::size_t v = 0; v < cert.colors.size(); ++v) {
        if (cert.colors[v] == kUncolored)
            return reject(RejectReason::NotTotal, "vertex " + std::to_string(v) + " is uncolored");
        if (cert.colors[v] < 1 || cert.colors[v] > cert.k)
            return reject(RejectReason::ColorOutOfRange, "vertex " + std::to_string(v));
    }
    PartialColoring c(cert.k, cert.colors);
    for (auto [u, v] : g.edges())
        if (c[u] == c[v])
            return reject(RejectReason::ImproperEdge,
                          "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has color " + std::to_string(c[u]));
    std::vector<char> used(static_cast<std::size_t>(cert.k) + 1, 0);
    for (Color col : cert.colors)
        used[static_cast<std::size_t>(col)] = 1;
    for (Color col = 1; col <= cert.k; ++col)
        if (!used[static_cast<std::size_t>(col)])
            return reject(RejectReason::EmptyClass, "class " + std::to_string(col));
    for (Color col = 1; col <= cert.k; ++col) {
        auto claim = cert.b_vertices.find(col);
        if (claim == cert.b_vertices.end())
            return reject(RejectReason::MissingBVertex, "class " + std::to_string(col));
        const Vertex v = claim->second;
        if (!g.contains(v) || c[v] != col)
            return reject(RejectReason::WrongClass,
                          "claimed vertex " + std::to_string(v) + " is not in class " + std::to_string(col));
        if (!is_b_vertex(c, g, v))
            return reject(RejectReason::NotABVertex,
                          "vertex " + std::to_string(v) + " misses a color in its closed neighborhood");
    }
    if (cert.b_vertices.size() != static_cast<std::size_t>(cert.k))
        return reject(RejectReason::MissingBVertex, "claims for classes outside [1, k]");
    return Verdict{true, RejectReason::None, {}};
}

} // namespace bchrome
