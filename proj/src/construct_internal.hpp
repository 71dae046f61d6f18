#pragma once

#include "bchrome/construct.hpp"
#include "bchrome/error.hpp"

#include <string>

namespace bchrome::detail {

inline std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

/// Throws PreconditionViolated unless g is d-regular with d >= 7 and girth
/// at least 5 (exactly 5 when `exact_girth`). Returns d.
inline int require_strategy_setting(const GraphFacts& facts, bool exact_girth)
{
    const auto d = facts.degree();
    if (!d)
        throw Error(ErrorCode::PreconditionViolated, "graph is not regular");
    if (*d < 7)
        throw Error(ErrorCode::PreconditionViolated, "d<7 (d = " + std::to_string(*d) + ")");
    const auto g5 = facts.girth();
    if (g5 && *g5 < 5)
        throw Error(ErrorCode::PreconditionViolated, "girth<5 (girth = " + std::to_string(*g5) + ")");
    if (exact_girth && (!g5 || *g5 != 5))
        throw Error(ErrorCode::PreconditionViolated,
                    "girth!=5 (girth = " + (g5 ? std::to_string(*g5) : std::string("infinite")) + ")");
    return *d;
}

/// Certificate with b-vertices x (class d+1) and x_t (class t), checked.
Certificate finish_neighbor_certificate(const Graph& g, const GraphFacts& facts, PartialColoring& c,
                                        const BunchStructure& bs, Strategy strategy);

/// Escalates a verifier rejection; constructions never hand out rejected
/// certificates.
void require_accepted(const Certificate& cert, const Graph& g);

} // namespace bchrome::detail
