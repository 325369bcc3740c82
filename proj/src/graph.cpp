#include "labyrinth/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

namespace labyrinth {

std::string to_string(const Passage& p) {
  return std::to_string(p.node) + ":" + std::to_string(p.port);
}

namespace {

std::string describe(std::size_t index, const EdgeSpec& s) {
  return "edge #" + std::to_string(index) + " (" + std::to_string(s.u) + ":" +
         std::to_string(s.port_u) + " -- " + std::to_string(s.v) + ":" + std::to_string(s.port_v) + ")";
}

}  // namespace

Graph Graph::build(std::size_t node_count, std::span<const EdgeSpec> specs) {
  using Kind = GraphError::Kind;
  if (node_count == 0) throw GraphError(Kind::InvalidArgument, "graph needs at least one node");

  Graph g;
  g.adjacency_.assign(node_count, {});
  std::vector<std::vector<std::optional<std::size_t>>> ports(node_count);

  auto claim = [&](std::size_t index, const EdgeSpec& s, NodeId node, Port port, std::size_t slot) {
    if (node >= node_count) {
      throw GraphError(Kind::DanglingNode, describe(index, s) + " references node " + std::to_string(node) +
                                               " but the graph has " + std::to_string(node_count) + " nodes");
    }
    auto& row = ports[node];
    if (port >= row.size()) row.resize(port + 1);
    if (row[port]) {
      throw GraphError(Kind::DuplicatePort,
                       describe(index, s) + " reuses port " + std::to_string(node) + ":" + std::to_string(port));
    }
    row[port] = slot;
  };

  g.edges_.reserve(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const EdgeSpec& s = specs[i];
    if (s.weight <= 0) {
      throw GraphError(Kind::NonPositiveWeight, describe(i, s) + " has non-positive weight " + to_string(s.weight));
    }
    claim(i, s, s.u, s.port_u, 2 * i);
    claim(i, s, s.v, s.port_v, 2 * i + 1);
    g.edges_.push_back(Edge{static_cast<EdgeId>(i), {Passage{s.u, s.port_u}, Passage{s.v, s.port_v}}, s.weight});
    g.total_length_ += s.weight;
    if (s.weight != Rational(1)) g.unit_weights_ = false;
  }

  for (NodeId node = 0; node < node_count; ++node) {
    auto& row = ports[node];
    for (Port port = 0; port < row.size(); ++port) {
      if (!row[port]) {
        throw GraphError(Kind::PortGap, "node " + std::to_string(node) + " has ports up to " +
                                            std::to_string(row.size() - 1) + " but port " + std::to_string(port) +
                                            " is unused");
      }
      g.adjacency_[node].push_back(*row[port]);
    }
  }

  auto reach = g.hop_distances(0);
  for (NodeId node = 0; node < node_count; ++node) {
    if (reach[node] == std::numeric_limits<std::size_t>::max()) {
      throw GraphError(Kind::Disconnected, "node " + std::to_string(node) + " is unreachable from node 0");
    }
  }

  if (g.unit_weights_) {
    std::size_t d = 0;
    for (NodeId s = 0; s < node_count; ++s) {
      auto dist = g.hop_distances(s);
      d = std::max(d, *std::max_element(dist.begin(), dist.end()));
    }
    g.diameter_ = Rational(static_cast<std::int64_t>(d));
  } else {
    Rational d{0};
    for (NodeId s = 0; s < node_count; ++s) {
      for (const auto& x : g.weighted_distances(s)) d = std::max(d, x);
    }
    g.diameter_ = d;
  }
  return g;
}

std::vector<std::size_t> Graph::hop_distances(NodeId from) const {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(node_count(), kInf);
  std::queue<NodeId> frontier;
  dist.at(from) = 0;
  frontier.push(from);
  while (!frontier.empty()) {
    NodeId u = frontier.front();
    frontier.pop();
    for (std::size_t s : adjacency_[u]) {
      NodeId v = edges_[s / 2].ends[1 - s % 2].node;
      if (dist[v] == kInf) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

std::vector<Rational> Graph::weighted_distances(NodeId from) const {
  std::vector<std::optional<Rational>> best(node_count());
  using Item = std::pair<Rational, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  best.at(from) = Rational(0);
  heap.emplace(Rational(0), from);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d != *best[u]) continue;
    for (std::size_t s : adjacency_[u]) {
      const Edge& e = edges_[s / 2];
      NodeId v = e.ends[1 - s % 2].node;
      Rational nd = d + e.weight;
      if (!best[v] || nd < *best[v]) {
        best[v] = nd;
        heap.emplace(nd, v);
      }
    }
  }
  std::vector<Rational> out;
  out.reserve(best.size());
  for (auto& b : best) out.push_back(b.value_or(Rational(-1)));
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.ends != y.ends || x.weight != y.weight) return false;
  }
  return true;
}

}  // namespace labyrinth
