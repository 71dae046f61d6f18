#pragma once

#include "bchrome/coloring.hpp"
#include "bchrome/graph.hpp"

#include <optional>
#include <vector>

namespace bchrome {

/// Family A(1)..A(s) of color sets drawn from [universe].
struct SetFamily {
    std::vector<std::vector<Color>> sets;
    Color universe = 0;
};

/// Either a system of distinct representatives (`assignment[i]` is drawn
/// from set i) or a Hall violator: indices I with |I| > |union of A(i)|.
struct TransversalResult {
    std::optional<std::vector<Color>> assignment;
    std::vector<int> violator;

    bool found() const { return assignment.has_value(); }
};

/// Maximum bipartite matching between set indices and colors. Colors are
/// tried in ascending order, so the result is deterministic.
TransversalResult find_transversal(const SetFamily& family);

/// Union size of the sets named by `indices`.
std::size_t union_size(const SetFamily& family, const std::vector<int>& indices);

/// L(v) = [d] \ ({t} ∪ colors on N[v]) for each v of bunch t, in bunch order.
/// Throws BunchAlreadyColored, or PreconditionViolated if an earlier bunch
/// still has uncolored vertices.
SetFamily build_bunch_lists(const PartialColoring& c, const Graph& g, const BunchStructure& bs, int t);

/// Colors bunch t bijectively with [d] \ {t} so that x_t becomes a b-vertex
/// of class t. Throws HallFailure carrying the violating bunch positions.
void color_bunch(PartialColoring& c, const Graph& g, const BunchStructure& bs, int t);

} // namespace bchrome
