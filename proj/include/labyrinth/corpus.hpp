#pragma once

#include "labyrinth/graph.hpp"

#include <memory>
#include <string>
#include <vector>

namespace labyrinth {

struct CorpusEntry {
  std::string name;
  std::shared_ptr<const Graph> graph;
  NodeId origin = 0;
};

/// `count` seeded random connected graphs with 2 <= n <= 10 and m <= 15
/// (every fourth one a multigraph), followed by the two-pendant triangle
/// from node A. Entry k depends only on (seed, k).
std::vector<CorpusEntry> standard_corpus(std::uint64_t seed = 1, std::size_t count = 200);

/// The same topologies with lengths drawn from {1/4, 2/4, ..., 4}.
std::vector<CorpusEntry> weighted_corpus(const std::vector<CorpusEntry>& base, std::uint64_t seed = 1);

}  // namespace labyrinth
