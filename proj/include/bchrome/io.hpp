#pragma once

#include "bchrome/coloring.hpp"
#include "bchrome/construct.hpp"
#include "bchrome/graph.hpp"

#include <string>
#include <string_view>

namespace bchrome {

/// Accepts n <= 258047. A trailing newline is ignored, as is a leading
/// ">>graph6<<" header. Nonzero padding bits are rejected.
Graph parse_graph6(std::string_view text);
/// No trailing newline.
std::string write_graph6(const Graph& g);

/// "p edge n m" followed by 1-based "e u v" lines; "c" lines are comments.
/// Repeated edges collapse; m in the p-line is not checked against them.
Graph parse_dimacs(std::string_view text);
std::string write_dimacs(const Graph& g);

/// DIMACS if the first byte is 'p' or 'c', graph6 otherwise.
Graph parse_graph(std::string_view text);

inline constexpr int kCertificateVersion = 1;

/// Throws SchemaViolation naming the offending JSON path.
Certificate read_certificate(std::string_view json);
std::string write_certificate(const Certificate& cert);

/// Pretty-printed JSON documents for the census subcommands.
std::string hypothesis_report_json(const HypothesisReport& report);
std::string census_json(const Graph& g, const std::vector<VertexCensus>& vertices);

} // namespace bchrome
