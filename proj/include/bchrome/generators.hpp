#pragma once

#include "bchrome/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bchrome {

enum class Family { Petersen, Cycle, HoffmanSingleton, Robertson, RandomRegular };

std::optional<Family> parse_family(std::string_view name);
std::string_view to_string(Family f);

struct GenSpec {
    Family family = Family::Petersen;
    int d = 3;
    int n = 10;
    int girth_min = 5;
    std::uint64_t seed = 1;
    int max_attempts = 20;
};

/// Outer cycle 0-4, spokes i ~ i+5, inner pentagram 5-7-9-6-8-5.
Graph petersen();

/// Pentagons P_h (vertices 5h+j) and pentagrams Q_i (vertices 25+5i+j),
/// with P_h[j] ~ Q_i[(h*i + j) mod 5].
Graph hoffman_singleton();

/// 4-regular girth-5 graph on 19 vertices: a Hamiltonian cycle plus chords.
Graph robertson();

/// Throws InvalidParameter for n < 3.
Graph cycle(int n);

/// Configuration-model pairing followed by edge swaps that break cycles
/// shorter than `girth_min` (and loops / parallel edges). Deterministic per
/// seed. Throws InvalidParameter on bad parameters and GenerationFailed
/// after `max_attempts` fresh pairings.
Graph random_regular_girth(const GenSpec& spec);

Graph generate(const GenSpec& spec);

/// Same graph under a seeded random relabeling of the vertices.
Graph relabel(const Graph& g, std::uint64_t seed);

} // namespace bchrome
