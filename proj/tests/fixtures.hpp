#pragma once

#include "labyrinth/graph.hpp"
#include "labyrinth/generators.hpp"
#include "labyrinth/graph_io.hpp"
#include "labyrinth/random.hpp"

#include <algorithm>
#include <memory>
#include <vector>

namespace fixtures {

using labyrinth::EdgeSpec;
using labyrinth::Graph;

inline std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

inline Graph k2() {
  std::vector<EdgeSpec> e{{0, 0, 1, 0}};
  return Graph::build(2, e);
}

inline Graph triangle() {
  std::vector<EdgeSpec> e{{0, 0, 1, 0}, {1, 1, 2, 0}, {2, 1, 0, 1}};
  return Graph::build(3, e);
}

// Two triangles glued at node 0.
inline Graph bowtie() {
  return labyrinth::parse_graph(
      "graph 5\n"
      "edge 0 0 1 0 1\nedge 1 1 2 0 1\nedge 2 1 0 1 1\n"
      "edge 0 2 3 0 1\nedge 3 1 4 0 1\nedge 4 1 0 3 1\n");
}

// 4-cycle 3-2-1-0-3, ports as a random draw produced them.
inline Graph square() {
  return labyrinth::parse_graph(
      "graph 4\n"
      "edge 3 0 2 0 1\nedge 3 1 0 0 1\nedge 1 0 2 1 1\nedge 1 1 0 1 1\n");
}

// n in [lo, hi], m up to `most` and within what n allows.
inline Graph random_graph(labyrinth::Rng& rng, std::size_t lo, std::size_t hi, std::size_t most, bool multi,
                          bool weighted = false) {
  const std::size_t n = rng.between(lo, hi);
  const std::size_t cap = multi ? most : std::min(most, n * (n - 1) / 2);
  const std::size_t m = rng.between(n - 1, std::max(cap, n - 1));
  return labyrinth::random_connected_graph(n, m, weighted, rng.next(), multi);
}

}  // namespace fixtures
