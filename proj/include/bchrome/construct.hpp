#pragma once

#include "bchrome/coloring.hpp"
#include "bchrome/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bchrome {

enum class Strategy { NoC6, BoundedC6, TwoBunch };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

/// Global facts every strategy checks; computing girth is the expensive part,
/// so callers that run many centers compute this once.
struct GraphFacts {
    GraphFingerprint fingerprint;

    static GraphFacts of(const Graph& g) { return GraphFacts{bchrome::fingerprint(g)}; }
    std::optional<int> degree() const { return fingerprint.degree; }
    std::optional<int> girth() const { return fingerprint.girth; }
};

// ---------------------------------------------------------------------------
// Seeding and bunch-by-bunch extension

/// Colors x with d+1, x_t with t, X_1 with 2..d (ascending positions), then
/// X_2..X_4 through the transversal solver. Needs g d-regular, d >= 7,
/// girth >= 5; afterwards x and x_1..x_4 are b-vertices.
PartialColoring lemma_extension(const Graph& g, const BunchStructure& bs);
PartialColoring lemma_extension(const Graph& g, const GraphFacts& facts, const BunchStructure& bs);

/// Monochromatic edges between bunch t and bunches 1..t-1.
int backward_conflicts(const PartialColoring& c, const Graph& g, const BunchStructure& bs, int t);

struct RepairTrace {
    /// Conflict count before the first swap and after every swap.
    std::vector<int> counts;
    /// Which rule picked each swap partner: 'a' free vertex, 'b' same earlier
    /// bunch, 'c' two partners sharing an earlier bunch, 'd' partner reaching
    /// the bunch indexed by the conflict color.
    std::string rules;
};

/// Removes every monochromatic edge between bunch t and earlier bunches by
/// swapping colors inside bunch t. Bunch t must be colored bijectively with
/// [d] \ {t}. Every swap strictly lowers the conflict count; when no rule
/// yields such a swap, throws RepairStuck.
RepairTrace swap_repair(PartialColoring& c, const Graph& g, const BunchStructure& bs, int t);

// ---------------------------------------------------------------------------
// Strategies. Each returns a certificate that has already passed
// verify_certificate with k = d + 1.

/// x lies on no six-cycle of g.
Certificate color_no_c6(const Graph& g, Vertex x);
Certificate color_no_c6(const Graph& g, const GraphFacts& facts, Vertex x);

/// N(x) ordered by the non-ascending S2-degree sequences of the bunches,
/// larger sequences first; ties by ascending identifier.
std::vector<Vertex> order_by_degree_sequences(const Graph& g, Vertex x);

/// x lies on at most five six-cycles inside G[N2[x]].
Certificate color_bounded_c6(const Graph& g, Vertex x);
Certificate color_bounded_c6(const Graph& g, const GraphFacts& facts, Vertex x);

enum class Subcase { One, Two, TwoNoRow2Neighbor };
std::string_view to_string(Subcase s);

/// The (d-1) x d arrangement of S2(x) used by the two-bunch coloring.
/// Rows and columns are 1-based, matching the usual matrix convention.
struct BunchMatrix {
    Vertex center = -1;
    int d = 0;
    /// columns[j-1] is the neighbor of x whose bunch forms column j.
    std::vector<Vertex> columns;
    /// Row-major cells, (d-1) * d entries.
    std::vector<Vertex> cells;
    std::vector<Vertex> independent_set;
    Subcase subcase = Subcase::One;
    std::vector<std::string> log;

    int rows() const { return d - 1; }
    Vertex cell(int row, int col) const
    {
        return cells.at(static_cast<std::size_t>((row - 1) * d + (col - 1)));
    }
    Vertex& cell(int row, int col) { return cells.at(static_cast<std::size_t>((row - 1) * d + (col - 1))); }
};

enum class Requirement {
    Layout,          // columns are the bunches, cells cover S2(x) once
    ClosedColumns,   // requirement 1
    RowNeighborhood, // requirement 2
    SeedPlacement,   // requirement 3, placement part
    SecondRowSeed,   // requirement 4
    Independence,    // requirement 3, independence of the seed set
};

std::string_view to_string(Requirement r);

struct RequirementViolation {
    Requirement requirement;
    std::string detail;
};

std::vector<RequirementViolation> check_requirements(const Graph& g, const BunchMatrix& m);

/// Orders the bunches of x into a BunchMatrix with the closed bunches of
/// `first` and `last` (neighbors of x) as columns 1 and d. Throws
/// ConstructionFailed when a vertex the ordering relies on does not exist.
BunchMatrix order_two_bunch(const Graph& g, Vertex x, Vertex first, Vertex last);
BunchMatrix order_two_bunch(const Graph& g, const GraphFacts& facts, Vertex x, Vertex first, Vertex last);

/// Uses the two lowest closed bunches of x.
Certificate color_two_bunch(const Graph& g, Vertex x);
Certificate color_two_bunch(const Graph& g, const GraphFacts& facts, Vertex x);

/// Colors the matrix and completes greedily; exposed so tests can inspect
/// the coloring before completion via `before_completion`.
Certificate color_from_matrix(const Graph& g, const GraphFacts& facts, const BunchMatrix& m,
                              PartialColoring* before_completion = nullptr);

Certificate run_strategy(Strategy s, const Graph& g, const GraphFacts& facts, Vertex x);

// ---------------------------------------------------------------------------
// Hypothesis census and dispatch

struct VertexCensus {
    Vertex vertex = -1;
    long long c6_through = 0;
    /// nullopt when G[N2[v]] has a cycle shorter than five.
    std::optional<long long> c6_in_n2;
    std::optional<int> closed_bunches;
    std::vector<Strategy> strategies;
    /// Why each missing strategy does not apply.
    std::vector<std::string> reasons;
};

struct HypothesisReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::optional<int> d;
    std::optional<int> girth;
    bool degree_at_least_7 = false;
    bool girth_exactly_5 = false;
    bool contains_c6 = false;
    /// 2d^3 - 2d^2 + 2d - 1; zero when g is not regular.
    long long order_bound = 0;
    bool within_order_bound = false;
    std::vector<VertexCensus> vertices;
};

/// `threads` <= 1 runs inline; results are ordered by vertex either way.
HypothesisReport hypothesis_report(const Graph& g, unsigned threads = 1);
VertexCensus census_vertex(const Graph& g, const GraphFacts& facts, Vertex v);

/// Tries no-C6, bounded-C6, then two-bunch at each vertex in ascending order
/// and returns the first certificate. Throws NoStrategyApplies.
Certificate auto_color(const Graph& g);

} // namespace bchrome
