#pragma once

#include "bchrome/coloring.hpp"
#include "bchrome/graph.hpp"
#include "bchrome/transversal.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace bchrome {

/// Exceeding any limit ends a search with BudgetExceeded, never with a guess.
struct SearchLimits {
    std::size_t max_vertices = 10000;
    std::chrono::milliseconds time_budget{60000};
    std::uint64_t node_budget = 10'000'000;
};

enum class Outcome { Yes, No, BudgetExceeded };

std::string_view to_string(Outcome o);

struct SearchResult {
    Outcome outcome = Outcome::No;
    /// Set for Yes.
    std::optional<PartialColoring> witness;
    std::uint64_t nodes = 0;
};

/// Complete backtracking search for a b-coloring with exactly k colors.
SearchResult b_coloring_exists(const Graph& g, int k, const SearchLimits& limits = {});

struct BChromaticResult {
    int value = 0;
    /// False when a budget blocked some larger k: `value` is then only a
    /// lower bound.
    bool exact = true;
    std::optional<PartialColoring> witness;
};

/// Tests k = Δ+1, Δ, ..., 1 independently and keeps the largest Yes.
BChromaticResult exact_b_chromatic(const Graph& g, const SearchLimits& limits = {});

/// Plain chromatic number by backtracking; nullopt on budget exhaustion.
std::optional<int> chromatic_number(const Graph& g, const SearchLimits& limits = {});

using SixCycle = std::array<Vertex, 6>;

/// Distinct six-cycles through x, each in canonical form: the
/// lexicographically smallest of its twelve rotations and reflections.
std::vector<SixCycle> enumerate_c6_through(const Graph& g, Vertex x);

/// Exhaustive injective search over the family; throws FamilyTooLarge for
/// more than ten sets.
std::optional<std::vector<Color>> transversal_backtrack(const SetFamily& family);

} // namespace bchrome
