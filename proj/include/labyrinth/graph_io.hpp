#pragma once

#include "labyrinth/graph.hpp"

#include <string>
#include <string_view>

namespace labyrinth {

// Line-oriented text format:
//
//   graph <n>
//   edge <u> <port_u> <v> <port_v> <weight>     (weight is "p/q" or an integer)
//
// '#' starts a comment; blank lines are ignored. Node ids are 0-based.

/// Throws GraphError(Syntax) with a 1-based line number for malformed text,
/// and the build_graph errors for semantically invalid graphs.
Graph parse_graph(std::string_view text);

/// Emits edges in id order; parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const Graph& g);

}  // namespace labyrinth
