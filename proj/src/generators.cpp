#include "labyrinth/generators.hpp"

#include "labyrinth/random.hpp"

#include <set>
#include <utility>

namespace labyrinth {

Subdivision subdivide(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<EdgeSpec> specs;
  specs.reserve(2 * g.edge_count());
  Subdivision out{Graph{}, {}, n};
  for (const Edge& e : g.edges()) {
    const NodeId mid = static_cast<NodeId>(n + e.id);
    const Rational half = e.weight / 2;
    specs.push_back({e.ends[0].node, e.ends[0].port, mid, 0, half});
    specs.push_back({mid, 1, e.ends[1].node, e.ends[1].port, half});
    out.origin_edge.push_back(e.id);
    out.origin_edge.push_back(e.id);
  }
  out.graph = Graph::build(n + g.edge_count(), specs);
  return out;
}

Graph line_graph(std::size_t segments, std::span<const Rational> weights) {
  if (segments == 0) throw GraphError(GraphError::Kind::EmptyLine, "a line needs at least one segment");
  if (weights.size() != segments) {
    throw GraphError(GraphError::Kind::InvalidArgument,
                     "line with " + std::to_string(segments) + " segments got " + std::to_string(weights.size()) +
                         " weights");
  }
  std::vector<EdgeSpec> specs;
  for (std::size_t i = 0; i < segments; ++i) {
    const auto u = static_cast<NodeId>(i);
    specs.push_back({u, i == 0 ? 0u : 1u, u + 1, 0, weights[i]});
  }
  return Graph::build(segments + 1, specs);
}

Graph line_graph(std::size_t segments) {
  std::vector<Rational> ones(segments, Rational(1));
  return line_graph(segments, ones);
}

Gadget cycle_gadget(const Rational& w1, const Rational& w2, bool broken) {
  if (w1 <= 0 || w2 <= 0) throw GraphError(GraphError::Kind::NonPositiveWeight, "gadget weights must be positive");
  std::vector<EdgeSpec> specs;
  specs.push_back({0, 0, 1, 1, w1});
  if (!broken) {
    specs.push_back({0, 1, 1, 0, w2});
    return Gadget{Graph::build(2, specs), 0, 1};
  }
  specs.push_back({0, 1, 2, 0, w2 / 2});
  specs.push_back({1, 0, 3, 0, w2 / 2});
  return Gadget{Graph::build(4, specs), 0, 1};
}

Graph random_connected_graph(std::size_t n, std::size_t m, bool weighted, std::uint64_t seed, bool multigraph) {
  using Kind = GraphError::Kind;
  if (n == 0) throw GraphError(Kind::InfeasibleEdgeCount, "no nodes");
  if (m + 1 < n) {
    throw GraphError(Kind::InfeasibleEdgeCount,
                     std::to_string(m) + " edges cannot connect " + std::to_string(n) + " nodes");
  }
  if (!multigraph && m > n * (n - 1) / 2) {
    throw GraphError(Kind::InfeasibleEdgeCount,
                     std::to_string(m) + " edges exceed the simple-graph maximum for " + std::to_string(n) + " nodes");
  }

  Rng rng(seed);
  std::vector<NodeId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<NodeId>(i);
  rng.shuffle(order);

  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::set<std::pair<NodeId, NodeId>> used;
  auto key = [](NodeId a, NodeId b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
  for (std::size_t i = 1; i < n; ++i) {
    NodeId parent = order[rng.below(i)];
    pairs.emplace_back(parent, order[i]);
    used.insert(key(parent, order[i]));
  }

  if (multigraph) {
    while (pairs.size() < m) {
      auto u = static_cast<NodeId>(rng.below(n));
      auto v = static_cast<NodeId>(rng.below(n));
      pairs.emplace_back(u, v);
    }
  } else {
    std::vector<std::pair<NodeId, NodeId>> spare;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (!used.count({u, v})) spare.emplace_back(u, v);
      }
    }
    rng.shuffle(spare);
    for (std::size_t i = 0; pairs.size() < m; ++i) pairs.push_back(spare[i]);
  }

  rng.shuffle(pairs);
  std::vector<Port> next_port(n, 0);
  std::vector<EdgeSpec> specs;
  specs.reserve(m);
  for (auto [u, v] : pairs) {
    if (rng.below(2)) std::swap(u, v);
    EdgeSpec s;
    s.u = u;
    s.port_u = next_port[u]++;
    s.v = v;
    s.port_v = next_port[v]++;
    s.weight = weighted ? Rational(static_cast<std::int64_t>(rng.between(1, 8)), 8) : Rational(1);
    specs.push_back(s);
  }
  return Graph::build(n, specs);
}

Graph with_random_weights(const Graph& g, std::span<const Rational> palette, std::uint64_t seed) {
  if (palette.empty()) throw GraphError(GraphError::Kind::InvalidArgument, "empty weight palette");
  Rng rng(seed);
  std::vector<EdgeSpec> specs;
  for (const Edge& e : g.edges()) {
    specs.push_back({e.ends[0].node, e.ends[0].port, e.ends[1].node, e.ends[1].port, palette[rng.below(palette.size())]});
  }
  return Graph::build(g.node_count(), specs);
}

Graph two_pendant_triangle() {
  const std::vector<EdgeSpec> specs = {
      {0, 0, 1, 0, Rational(1)},  // A-B
      {1, 1, 3, 0, Rational(1)},  // B-D
      {0, 1, 2, 1, Rational(1)},  // A-C
      {2, 0, 1, 2, Rational(1)},  // C-B
      {2, 2, 4, 0, Rational(1)},  // C-E
  };
  return Graph::build(5, specs);
}

}  // namespace labyrinth
