#pragma once

#include "bchrome/graph.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bchrome {

/// Colors are 1..k; 0 marks an uncolored vertex.
using Color = std::int32_t;
inline constexpr Color kUncolored = 0;

/// A color assignment over [k] in which some vertices may be uncolored.
///
/// Assignment itself does not enforce properness: the swap repair briefly
/// needs monochromatic edges. Use `is_proper` or `assign_proper` where it
/// matters.
class PartialColoring {
public:
    PartialColoring() = default;
    PartialColoring(std::size_t n, Color k) : k_(k), colors_(n, kUncolored) {}
    PartialColoring(Color k, std::vector<Color> colors) : k_(k), colors_(std::move(colors)) {}

    Color k() const { return k_; }
    std::size_t size() const { return colors_.size(); }

    Color operator[](Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
    bool is_colored(Vertex v) const { return (*this)[v] != kUncolored; }
    bool is_total() const;

    /// Throws InvalidParameter for colors outside [k].
    void assign(Vertex v, Color c);
    /// As `assign`, but throws InternalInvariantViolation if a neighbor
    /// already carries c.
    void assign_proper(const Graph& g, Vertex v, Color c);
    void clear(Vertex v) { colors_[static_cast<std::size_t>(v)] = kUncolored; }

    std::span<const Color> colors() const { return colors_; }

    bool operator==(const PartialColoring&) const = default;

private:
    Color k_ = 0;
    std::vector<Color> colors_;
};

/// L(v): colors of [k] absent from N[v].
std::vector<Color> available_colors(const PartialColoring& c, const Graph& g, Vertex v);

/// True if no edge joins two vertices of the same assigned color.
bool is_proper(const PartialColoring& c, const Graph& g);

/// Colored vertices whose closed neighborhood carries all k colors.
std::vector<Vertex> b_vertices(const PartialColoring& c, const Graph& g);

bool is_b_vertex(const PartialColoring& c, const Graph& g, Vertex v);

/// Proper, uses every color of [k], and each class has a b-vertex.
/// Throws NotTotal on a partial coloring.
bool is_b_coloring(const PartialColoring& c, const Graph& g);

/// First fit over the uncolored vertices in `order` (ascending identifiers by
/// default). Colored vertices are never touched. Throws CompletionFailed
/// naming the first vertex with no available color.
void greedy_complete(PartialColoring& c, const Graph& g, std::optional<std::vector<Vertex>> order = std::nullopt);

struct GraphFingerprint {
    std::size_t n = 0;
    std::size_t m = 0;
    std::optional<int> degree;
    std::optional<int> girth;

    bool operator==(const GraphFingerprint&) const = default;
};

GraphFingerprint fingerprint(const Graph& g);

/// Replayable record of one constructed b-coloring.
struct Certificate {
    std::string strategy;
    Vertex center = -1;
    /// x_1..x_d as used by the construction.
    std::vector<Vertex> neighbor_order;
    /// Two-bunch only: the first-column vertex of each row, top to bottom.
    std::vector<Vertex> row_order;
    Color k = 0;
    std::vector<Color> colors;
    /// class -> claimed b-vertex
    std::map<Color, Vertex> b_vertices;
    GraphFingerprint graph;
    std::string provenance;

    bool operator==(const Certificate&) const = default;
};

enum class RejectReason {
    None,
    FingerprintMismatch,
    WrongLength,
    NotTotal,
    ColorOutOfRange,
    ImproperEdge,
    EmptyClass,
    MissingBVertex,
    WrongClass,
    NotABVertex,
};

std::string_view to_string(RejectReason reason);

struct Verdict {
    bool accepted = false;
    RejectReason reason = RejectReason::None;
    std::string detail;

    explicit operator bool() const { return accepted; }
};

Verdict verify_certificate(const Certificate& cert, const Graph& g);

} // namespace bchrome
