#pragma once

#include "labyrinth/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace labyrinth {

/// A graph whose edges were each split at a fresh midpoint node.
struct Subdivision {
  Graph graph;
  /// Original edge for every new edge (new edges 2e and 2e+1 come from e).
  std::vector<EdgeId> origin_edge;
  /// Nodes [0, original_nodes) are the original nodes; the rest are midpoints.
  std::size_t original_nodes = 0;

  bool is_original(NodeId node) const { return node < original_nodes; }
};

/// Splits every edge e = u:pu -- v:pv into u:pu -- x:0 and x:1 -- v:pv with
/// x = n + e and both halves of length w_e / 2.
Subdivision subdivide(const Graph& g);

/// Path 0 - 1 - ... - segments. Node i uses port 0 towards i-1 (if any) and
/// the next port towards i+1.
Graph line_graph(std::size_t segments, std::span<const Rational> weights);
Graph line_graph(std::size_t segments);

/// Two-node, two-edge cycle between A and T, optionally with the second edge
/// severed into two dead-end stubs of half its length.
struct Gadget {
  Graph graph;
  NodeId a = 0;
  NodeId t = 1;
};

/// Ports: A uses port 0 for the w1 edge; T uses port 0 for the w2 edge (or its
/// stub when broken), so a first move from each start heads down opposite edges.
Gadget cycle_gadget(const Rational& w1, const Rational& w2, bool broken);

/// Random connected graph: a random spanning tree plus random extra edges,
/// ports numbered in insertion order. Simple unless `multigraph` is set, in
/// which case parallel edges and self-loops may appear. Weighted graphs draw
/// lengths from {1/8, 2/8, ..., 1}.
Graph random_connected_graph(std::size_t n, std::size_t m, bool weighted, std::uint64_t seed,
                             bool multigraph = false);

/// Same topology with lengths drawn uniformly from `palette`.
Graph with_random_weights(const Graph& g, std::span<const Rational> palette, std::uint64_t seed);

/// Triangle A-B-C with a pendant D on B and a pendant E on C (n=5, m=5).
/// Node ids A=0 ... E=4; edges in order A-B, B-D, A-C, C-B, C-E. With this
/// port numbering a single depth-first agent from A visits
/// A B D B C A C E C B A.
Graph two_pendant_triangle();

}  // namespace labyrinth
