#include "construct_internal.hpp"

#include <algorithm>
#include <set>

namespace bchrome {

using detail::idx;

std::string_view to_string(Subcase s)
{
    switch (s) {
    case Subcase::One: return "one";
    case Subcase::Two: return "two";
    case Subcase::TwoNoRow2Neighbor: return "two-no-row2-neighbor";
    }
    return "unknown";
}

std::string_view to_string(Requirement r)
{
    switch (r) {
    case Requirement::Layout: return "layout";
    case Requirement::ClosedColumns: return "requirement-1";
    case Requirement::RowNeighborhood: return "requirement-2";
    case Requirement::SeedPlacement: return "requirement-3";
    case Requirement::SecondRowSeed: return "requirement-4";
    case Requirement::Independence: return "independence";
    }
    return "unknown";
}

namespace {

std::string name(Vertex v) { return std::to_string(v); }

/// Incremental row/column bookkeeping for the ordering procedure.
///
/// Rows are labels on the vertices of the first column: every other vertex
/// of S2(x) has exactly one neighbor there and inherits its row. Columns are
/// labels on the neighbors of x.
class MatrixBuilder {
public:
    MatrixBuilder(const Graph& g, Vertex x, int d, Vertex first, Vertex last)
        : g_(g), x_(x), d_(d), bs_(bunches(g, x)), column_of_(g.order(), 0), row_label_(g.order(), 0)
    {
        columns_.assign(static_cast<std::size_t>(d), -1);
        set_column(1, first);
        set_column(d, last);
    }

    std::vector<std::string>& log() { return log_; }

    [[noreturn]] void fail(const std::string& step, const std::string& why)
    {
        log_.push_back("FAILED at " + step + ": " + why);
        throw ConstructionFailed(step, log_);
    }

    void note(const std::string& line) { log_.push_back(line); }

    void set_column(int j, Vertex neighbor)
    {
        columns_[static_cast<std::size_t>(j - 1)] = neighbor;
        column_of_[idx(neighbor)] = j;
        note("column " + std::to_string(j) + " := bunch of " + name(neighbor));
    }

    Vertex column_neighbor(int j) const { return columns_[static_cast<std::size_t>(j - 1)]; }

    /// Column of the bunch holding v, 0 while that bunch is unordered.
    int column_of_vertex(Vertex v) const
    {
        const int t = bs_.bunch_of(v);
        return t == 0 ? 0 : column_of_[idx(bs_.neighbor(t))];
    }

    Vertex bunch_neighbor(Vertex v) const
    {
        const int t = bs_.bunch_of(v);
        return t == 0 ? -1 : bs_.neighbor(t);
    }

    const std::vector<Vertex>& bunch_members(Vertex neighbor) const
    {
        for (int t = 1; t <= bs_.count(); ++t)
            if (bs_.neighbor(t) == neighbor)
                return bs_.bunch(t);
        throw Error(ErrorCode::InvalidParameter, name(neighbor) + " is not a neighbor of the center");
    }

    /// Unique neighbor of v inside the bunch of `neighbor`, or -1.
    Vertex neighbor_in_bunch(Vertex v, Vertex neighbor) const
    {
        for (Vertex w : g_.neighbors(v))
            if (bs_.bunch_of(w) != 0 && bunch_neighbor(w) == neighbor)
                return w;
        return -1;
    }

    Vertex first_column_anchor(Vertex v) const
    {
        if (bunch_neighbor(v) == column_neighbor(1))
            return v;
        return neighbor_in_bunch(v, column_neighbor(1));
    }

    int row(Vertex v) const
    {
        const Vertex anchor = first_column_anchor(v);
        return anchor < 0 ? 0 : row_label_[idx(anchor)];
    }

    void fix_row(int r, Vertex v, const std::string& step)
    {
        const Vertex anchor = first_column_anchor(v);
        if (anchor < 0)
            fail(step, name(v) + " has no neighbor in the first column");
        if (row_label_[idx(anchor)] != 0)
            fail(step, name(v) + " already lies in row " + std::to_string(row_label_[idx(anchor)]));
        row_label_[idx(anchor)] = r;
        note("row " + std::to_string(r) + " := row of " + name(v) + " (first column " + name(anchor) + ")");
    }

    /// Vertex of the given column neighbor's bunch lying in row r, or -1.
    Vertex at(Vertex neighbor, int r) const
    {
        for (Vertex v : bunch_members(neighbor))
            if (row(v) == r)
                return v;
        return -1;
    }

    Vertex at_column(int j, int r) const { return at(column_neighbor(j), r); }

    /// Neighbor of v in S2(x) lying in row r, or -1.
    Vertex neighbor_in_row(Vertex v, int r) const
    {
        for (Vertex w : g_.neighbors(v))
            if (bs_.bunch_of(w) != 0 && row(w) == r)
                return w;
        return -1;
    }

    std::vector<Vertex> unordered_neighbors() const
    {
        std::vector<Vertex> out;
        for (int t = 1; t <= bs_.count(); ++t)
            if (column_of_[idx(bs_.neighbor(t))] == 0)
                out.push_back(bs_.neighbor(t));
        return out;
    }

    std::vector<Vertex> unrowed_in(Vertex neighbor) const
    {
        std::vector<Vertex> out;
        for (Vertex v : bunch_members(neighbor))
            if (row(v) == 0)
                out.push_back(v);
        return out;
    }

    BunchMatrix finish(std::vector<Vertex> seeds, Subcase subcase)
    {
        BunchMatrix m;
        m.center = x_;
        m.d = d_;
        m.columns = columns_;
        m.cells.assign(static_cast<std::size_t>((d_ - 1) * d_), -1);
        for (int j = 1; j <= d_; ++j)
            for (Vertex v : bunch_members(column_neighbor(j))) {
                const int r = row(v);
                if (r < 1 || r > d_ - 1)
                    fail("fill", name(v) + " has no row");
                m.cell(r, j) = v;
            }
        m.independent_set = std::move(seeds);
        m.subcase = subcase;
        m.log = log_;
        return m;
    }

private:
    const Graph& g_;
    Vertex x_;
    int d_;
    BunchStructure bs_;
    std::vector<Vertex> columns_;
    std::vector<int> column_of_;
    std::vector<int> row_label_;
    std::vector<std::string> log_;
};

} // namespace

BunchMatrix order_two_bunch(const Graph& g, Vertex x, Vertex first, Vertex last)
{
    return order_two_bunch(g, GraphFacts::of(g), x, first, last);
}

BunchMatrix order_two_bunch(const Graph& g, const GraphFacts& facts, Vertex x, Vertex first, Vertex last)
{
    require_vertex(g, x);
    const int d = detail::require_strategy_setting(facts, true);
    if (first == last || !g.contains(first) || !g.contains(last) || !g.adjacent(x, first) || !g.adjacent(x, last))
        throw Error(ErrorCode::PreconditionViolated, "the two bunches must belong to distinct neighbors of the center");
    {
        const auto bs = bunches(g, x);
        const auto closed = closed_bunches(g, x);
        auto is_closed = [&](Vertex nb) {
            return std::any_of(closed.begin(), closed.end(), [&](int t) { return bs.neighbor(t) == nb; });
        };
        if (!is_closed(first) || !is_closed(last))
            throw Error(ErrorCode::PreconditionViolated, "bunch of " + name(!is_closed(first) ? first : last) +
                                                             " has a neighbor at distance 3 from the center");
    }

    MatrixBuilder b(g, x, d, first, last);
    std::vector<Vertex> seeds;

    // Row 1 through the lowest vertex of the last column.
    const Vertex xd1 = b.bunch_members(last).front();
    b.fix_row(1, xd1, "x_d^1");

    // Column 2: the lowest unordered bunch; its neighbor of x_d^1 opens row 2.
    {
        const Vertex col2 = b.unordered_neighbors().front();
        b.set_column(2, col2);
        const Vertex seed = b.neighbor_in_bunch(xd1, col2);
        if (seed < 0)
            b.fail("x_2^2", name(xd1) + " has no neighbor in column 2");
        b.fix_row(2, seed, "x_2^2");
        seeds.push_back(seed);
    }

    // Column 3: x_d^2 x_3^3 is an edge and x_d^3 x_2^1 is not.
    {
        const Vertex xd2 = b.at_column(d, 2);
        const Vertex x21 = b.at_column(2, 1);
        Vertex chosen = -1;
        Vertex seed = -1;
        for (Vertex candidate : b.unordered_neighbors()) {
            const Vertex w = b.neighbor_in_bunch(xd2, candidate);
            if (w < 0 || b.row(w) != 0)
                continue;
            const Vertex anchor = b.first_column_anchor(w);
            const Vertex would_be_xd3 = b.neighbor_in_bunch(anchor, last);
            if (would_be_xd3 < 0 || g.adjacent(would_be_xd3, x21))
                continue;
            chosen = candidate;
            seed = w;
            break;
        }
        if (chosen < 0)
            b.fail("X_3", "no unordered bunch meets both conditions");
        b.set_column(3, chosen);
        b.fix_row(3, seed, "x_3^3");
        seeds.push_back(seed);
    }

    const Vertex xd3 = b.at_column(d, 3);
    const Vertex z = b.neighbor_in_row(xd3, 2);
    if (z < 0)
        b.fail("N(x_d^3) in R_2", name(xd3) + " has no neighbor in row 2");

    Subcase subcase = Subcase::One;

    // Shared by subcase 1 and the subcase-2 branch without a row-2 neighbor.
    auto choose_penultimate_freely = [&](const std::string& step) {
        const auto free_rows = b.unrowed_in(last);
        if (free_rows.empty())
            b.fail(step, "no unordered vertex left in the last column");
        const Vertex xdp = free_rows.front();
        b.fix_row(d - 2, xdp, step);
        const Vertex u = b.neighbor_in_row(xdp, 2);
        if (u < 0 || b.column_of_vertex(u) != 0)
            b.fail(step, "the row-2 neighbor of x_d^{d-2} is not in an unordered bunch");
        b.set_column(d - 1, b.bunch_neighbor(u));
    };

    if (b.column_of_vertex(z) == 0) {
        b.note("subcase 1: row-2 neighbor " + name(z) + " of x_d^3 is unordered");
        b.set_column(4, b.bunch_neighbor(z));
        seeds.push_back(z);

        const Vertex x32 = b.at_column(3, 2);
        const Vertex xdl = b.neighbor_in_bunch(x32, last);
        if (xdl < 0 || b.row(xdl) != 0)
            b.fail("x_d^{d-1}", "neighbor of x_3^2 in the last column is missing or already placed");
        b.fix_row(d - 1, xdl, "x_d^{d-1}");
        choose_penultimate_freely("X_{d-1}");
    } else {
        subcase = Subcase::Two;
        if (b.column_of_vertex(z) != 3)
            b.fail("subcase 2", "row-2 neighbor " + name(z) + " of x_d^3 lies in column " +
                                    std::to_string(b.column_of_vertex(z)));
        b.note("subcase 2: row-2 neighbor of x_d^3 is x_3^2 = " + name(z));

        const Vertex v = b.neighbor_in_row(xd3, 1);
        if (v < 0 || b.column_of_vertex(v) != 0)
            b.fail("x_4^1", "row-1 neighbor of x_d^3 is missing or in an ordered bunch");
        b.set_column(4, b.bunch_neighbor(v));
        seeds.push_back(v);

        const Vertex x42 = b.at_column(4, 2);
        const Vertex xdl = b.neighbor_in_bunch(x42, last);
        if (xdl < 0 || b.row(xdl) != 0)
            b.fail("x_d^{d-1}", "neighbor of x_4^2 in the last column is missing or already placed");
        b.fix_row(d - 1, xdl, "x_d^{d-1}");

        const Vertex u = b.neighbor_in_row(v, 2);
        if (u < 0) {
            subcase = Subcase::TwoNoRow2Neighbor;
            b.note("x_4^1 has no row-2 neighbor");
            choose_penultimate_freely("X_{d-1}");
        } else {
            if (b.column_of_vertex(u) != 0)
                b.fail("X_{d-1}", "row-2 neighbor " + name(u) + " of x_4^1 is in an ordered bunch");
            b.set_column(d - 1, b.bunch_neighbor(u));
            const Vertex xdp = b.neighbor_in_bunch(u, last);
            if (xdp < 0 || b.row(xdp) != 0)
                b.fail("x_d^{d-2}", "neighbor of x_{d-1}^2 in the last column is missing or already placed");
            b.fix_row(d - 2, xdp, "x_d^{d-2}");
        }
    }

    // Remaining rows in identifier order; column j+1 follows the row-2
    // neighbor of x_d^j.
    {
        const auto rest = b.unrowed_in(last);
        if (static_cast<int>(rest.size()) != d - 6)
            b.fail("completion", std::to_string(rest.size()) + " vertices left in the last column, expected " +
                                     std::to_string(d - 6));
        for (std::size_t i = 0; i < rest.size(); ++i)
            b.fix_row(4 + static_cast<int>(i), rest[i], "completion");
        for (int j = 4; j <= d - 3; ++j) {
            const Vertex xdj = b.at_column(d, j);
            const Vertex u = b.neighbor_in_row(xdj, 2);
            if (u < 0 || b.column_of_vertex(u) != 0)
                b.fail("X_" + std::to_string(j + 1), "row-2 neighbor of x_d^" + std::to_string(j) +
                                                         " is missing or in an ordered bunch");
            b.set_column(j + 1, b.bunch_neighbor(u));
        }
        for (int i = 5; i <= d - 2; ++i)
            seeds.push_back(b.at_column(i, 2));
    }

    auto m = b.finish(std::move(seeds), subcase);
    auto violations = check_requirements(g, m);
    if (!violations.empty()) {
        for (const auto& v : violations)
            b.note(std::string(to_string(v.requirement)) + ": " + v.detail);
        b.fail("requirements", std::to_string(violations.size()) + " violations after ordering");
    }
    return m;
}

std::vector<RequirementViolation> check_requirements(const Graph& g, const BunchMatrix& m)
{
    std::vector<RequirementViolation> out;
    auto report = [&](Requirement r, std::string detail) { out.push_back({r, std::move(detail)}); };
    const int d = m.d;
    const Vertex x = m.center;

    if (!g.contains(x) || g.degree(x) != d || static_cast<int>(m.columns.size()) != d ||
        m.cells.size() != static_cast<std::size_t>((d - 1) * d)) {
        report(Requirement::Layout, "matrix dimensions do not match the center");
        return out;
    }
    {
        auto cols = m.columns;
        std::sort(cols.begin(), cols.end());
        const auto nb = g.neighbors(x);
        if (!std::equal(cols.begin(), cols.end(), nb.begin(), nb.end())) {
            report(Requirement::Layout, "columns are not a permutation of N(x)");
            return out;
        }
    }
    std::set<Vertex> seen;
    bool layout_ok = true;
    for (int r = 1; r <= d - 1; ++r) {
        for (int j = 1; j <= d; ++j) {
            const Vertex v = m.cell(r, j);
            const Vertex head = m.columns[static_cast<std::size_t>(j - 1)];
            if (!g.contains(v) || v == x || !g.adjacent(v, head)) {
                report(Requirement::Layout, "cell (" + std::to_string(r) + "," + std::to_string(j) + ") = " +
                                                std::to_string(v) + " is not in its column's bunch");
                layout_ok = false;
            } else if (!seen.insert(v).second) {
                report(Requirement::Layout, "vertex " + std::to_string(v) + " occupies two cells");
                layout_ok = false;
            }
        }
    }
    if (!layout_ok)
        return out;

    // Cell positions for lookups below.
    std::vector<int> row_of(g.order(), 0);
    std::vector<int> col_of(g.order(), 0);
    for (int r = 1; r <= d - 1; ++r)
        for (int j = 1; j <= d; ++j) {
            row_of[idx(m.cell(r, j))] = r;
            col_of[idx(m.cell(r, j))] = j;
        }
    auto in_n2 = [&](Vertex w) { return w != x && (g.adjacent(x, w) || col_of[idx(w)] != 0); };

    for (int j : {1, d})
        for (int r = 1; r <= d - 1; ++r)
            for (Vertex w : g.neighbors(m.cell(r, j)))
                if (!in_n2(w))
                    report(Requirement::ClosedColumns, "neighbor " + std::to_string(w) + " of cell (" +
                                                           std::to_string(r) + "," + std::to_string(j) +
                                                           ") is outside N2(x)");

    for (int r = 1; r <= d - 1; ++r) {
        std::vector<Vertex> expected{m.columns[0]};
        for (int j = 2; j <= d; ++j)
            expected.push_back(m.cell(r, j));
        std::sort(expected.begin(), expected.end());
        const auto actual = g.neighbors(m.cell(r, 1));
        if (!std::equal(expected.begin(), expected.end(), actual.begin(), actual.end()))
            report(Requirement::RowNeighborhood, "row " + std::to_string(r) + " is not N(x_1^" + std::to_string(r) +
                                                     ") minus x_1");
    }

    auto neighbor_in_column = [&](Vertex v, int j) -> Vertex {
        for (Vertex w : g.neighbors(v))
            if (col_of[idx(w)] == j)
                return w;
        return -1;
    };

    std::set<Vertex> placed;
    for (int j = 1; j <= d - 3; ++j) {
        const Vertex w = neighbor_in_column(m.cell(j, d), j + 1);
        if (w < 0) {
            report(Requirement::SeedPlacement, "x_d^" + std::to_string(j) + " has no neighbor in column " +
                                                   std::to_string(j + 1));
            continue;
        }
        if (row_of[idx(w)] > 3)
            report(Requirement::SeedPlacement, "neighbor of x_d^" + std::to_string(j) + " in column " +
                                                   std::to_string(j + 1) + " lies in row " +
                                                   std::to_string(row_of[idx(w)]));
        placed.insert(w);
    }
    const std::set<Vertex> declared(m.independent_set.begin(), m.independent_set.end());
    if (declared != placed || declared.size() != m.independent_set.size())
        report(Requirement::SeedPlacement, "declared independent set differs from the seed vertices");

    {
        const Vertex w = neighbor_in_column(m.cell(d - 2, d), d - 1);
        if (w < 0 || row_of[idx(w)] != 2)
            report(Requirement::SecondRowSeed, "neighbor of x_d^{d-2} in column d-1 is not in row 2");
    }

    for (std::size_t a = 0; a < m.independent_set.size(); ++a)
        for (std::size_t b = a + 1; b < m.independent_set.size(); ++b)
            if (g.contains(m.independent_set[a]) && g.contains(m.independent_set[b]) &&
                g.adjacent(m.independent_set[a], m.independent_set[b]))
                report(Requirement::Independence, "seeds " + std::to_string(m.independent_set[a]) + " and " +
                                                      std::to_string(m.independent_set[b]) + " are adjacent");
    return out;
}

Certificate color_from_matrix(const Graph& g, const GraphFacts& facts, const BunchMatrix& m,
                              PartialColoring* before_completion)
{
    const int d = m.d;
    const auto top = static_cast<Color>(d + 1);
    PartialColoring c(g.order(), top);
    auto fail = [&](const std::string& what) { throw Error(ErrorCode::InternalInvariantViolation, what); };
    auto put = [&](Vertex v, Color col) {
        try {
            c.assign_proper(g, v, col);
        } catch (const Error& e) {
            fail(std::string("two-bunch coloring: ") + e.what());
        }
    };

    put(m.center, top);
    for (int j = 1; j <= d; ++j)
        put(m.columns[static_cast<std::size_t>(j - 1)], static_cast<Color>(j));
    for (int r = 1; r <= d - 1; ++r)
        put(m.cell(r, 1), static_cast<Color>(r + 1));
    for (Vertex v : m.independent_set)
        put(v, 1);
    for (int r = 4; r <= d - 1; ++r)
        put(m.cell(r, d), top);

    // Row of the last-column neighbor of each cell.
    std::vector<int> last_row(g.order(), 0);
    for (int r = 1; r <= d - 1; ++r)
        last_row[idx(m.cell(r, d))] = r;
    auto color_via_last_column = [&](Vertex w) {
        for (Vertex u : g.neighbors(w))
            if (last_row[idx(u)] != 0) {
                put(w, c[m.cell(last_row[idx(u)], 1)]);
                return;
            }
        std::vector<std::string> log = m.log;
        log.push_back("vertex " + std::to_string(w) + " has no neighbor in the last column");
        throw ConstructionFailed("step 6", log);
    };
    for (int j = 1; j <= d - 2; ++j)
        for (int r = 1; r <= d - 1; ++r)
            if (!c.is_colored(m.cell(r, j)))
                color_via_last_column(m.cell(r, j));
    for (int r = 4; r <= d - 1; ++r)
        if (!c.is_colored(m.cell(r, d - 1)))
            color_via_last_column(m.cell(r, d - 1));

    for (int j = 1; j <= d - 2; ++j) {
        std::set<Color> used;
        for (int r = 1; r <= d - 1; ++r)
            if (!used.insert(c[m.cell(r, j)]).second)
                fail("column " + std::to_string(j) + " repeats color " + std::to_string(c[m.cell(r, j)]));
    }

    for (int r = 1; r <= 3; ++r)
        for (int j : {d - 1, d}) {
            const Vertex v = m.cell(r, j);
            if (c.is_colored(v))
                continue;
            auto free = available_colors(c, g, v);
            if (free.empty())
                fail("no color left for corner cell " + std::to_string(v));
            put(v, free.front());
        }

    if (before_completion)
        *before_completion = c;
    greedy_complete(c, g);

    Certificate cert;
    cert.strategy = std::string(to_string(Strategy::TwoBunch));
    cert.center = m.center;
    cert.neighbor_order = m.columns;
    for (int r = 1; r <= d - 1; ++r)
        cert.row_order.push_back(m.cell(r, 1));
    cert.k = top;
    cert.colors.assign(c.colors().begin(), c.colors().end());
    cert.b_vertices[top] = m.center;
    for (int j = 1; j <= d - 2; ++j)
        cert.b_vertices[static_cast<Color>(j)] = m.columns[static_cast<std::size_t>(j - 1)];
    cert.b_vertices[static_cast<Color>(d - 1)] = m.cell(d - 2, 1);
    cert.b_vertices[static_cast<Color>(d)] = m.cell(d - 1, 1);
    cert.graph = facts.fingerprint;
    detail::require_accepted(cert, g);
    return cert;
}

Certificate color_two_bunch(const Graph& g, Vertex x)
{
    return color_two_bunch(g, GraphFacts::of(g), x);
}

Certificate color_two_bunch(const Graph& g, const GraphFacts& facts, Vertex x)
{
    require_vertex(g, x);
    detail::require_strategy_setting(facts, true);
    const auto closed = closed_bunches(g, x);
    if (closed.size() < 2)
        throw Error(ErrorCode::PreconditionViolated, "vertex " + std::to_string(x) + " has " +
                                                         std::to_string(closed.size()) + " closed bunches (< 2)");
    const auto bs = bunches(g, x);
    const auto m = order_two_bunch(g, facts, x, bs.neighbor(closed[0]), bs.neighbor(closed[1]));
    return color_from_matrix(g, facts, m);
}

} // namespace bchrome
