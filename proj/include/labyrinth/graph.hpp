#pragma once

#include "labyrinth/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace labyrinth {

using NodeId = std::uint32_t;
using Port = std::uint32_t;
using EdgeId = std::uint32_t;

/// The intersection of an edge with one of its endpoints. Each passage
/// carries one whiteboard marker.
struct Passage {
  NodeId node = 0;
  Port port = 0;

  friend auto operator<=>(const Passage&, const Passage&) = default;
};

std::string to_string(const Passage& p);

/// Input row for Graph::build: edge u:port_u -- v:port_v with a length.
struct EdgeSpec {
  NodeId u = 0;
  Port port_u = 0;
  NodeId v = 0;
  Port port_v = 0;
  Rational weight{1};
};

struct Edge {
  EdgeId id = 0;
  std::array<Passage, 2> ends;
  Rational weight{1};
};

class GraphError : public std::runtime_error {
 public:
  enum class Kind {
    DuplicatePort,
    DanglingNode,
    PortGap,
    NonPositiveWeight,
    Disconnected,
    EmptyLine,
    InvalidArgument,
    InfeasibleEdgeCount,
    Syntax,
  };

  GraphError(Kind kind, const std::string& what, std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  /// 1-based source line for parse errors.
  std::optional<std::size_t> line() const { return line_; }

 private:
  Kind kind_;
  std::optional<std::size_t> line_;
};

/// Connected, undirected, port-numbered multigraph with positive rational
/// edge lengths. Immutable once built; agents never see node ids.
///
/// Passages are stored flat: edge `e` owns passage slots 2e (ends[0]) and
/// 2e+1 (ends[1]). Self-loops occupy two distinct ports of one node.
class Graph {
 public:
  /// Validates ports (unique per node, contiguous from 0), endpoints, weights
  /// and connectivity; derives m, L and D.
  static Graph build(std::size_t node_count, std::span<const EdgeSpec> specs);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t passage_count() const { return 2 * edges_.size(); }
  std::size_t degree(NodeId node) const { return adjacency_.at(node).size(); }

  /// Sum of edge lengths.
  const Rational& total_length() const { return total_length_; }
  /// Hop diameter when every weight is 1, weighted diameter otherwise.
  const Rational& diameter() const { return diameter_; }
  bool unit_weights() const { return unit_weights_; }

  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge> edges() const { return edges_; }

  EdgeId edge_at(Passage p) const { return slot(p) / 2; }
  /// Flat index in [0, passage_count()).
  std::size_t passage_index(Passage p) const { return slot(p); }
  Passage passage_at(std::size_t index) const { return edges_[index / 2].ends[index % 2]; }
  /// The passage at the far end of the edge that `p` belongs to.
  Passage opposite(Passage p) const {
    std::size_t s = slot(p);
    return edges_[s / 2].ends[1 - s % 2];
  }

  /// Unweighted BFS distances from `from`.
  std::vector<std::size_t> hop_distances(NodeId from) const;
  /// Weighted shortest-path distances from `from`.
  std::vector<Rational> weighted_distances(NodeId from) const;

  /// Structural equality: node count and edge list in id order.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::size_t slot(Passage p) const { return adjacency_.at(p.node).at(p.port); }

  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;  // node -> port -> passage slot
  Rational total_length_{0};
  Rational diameter_{0};
  bool unit_weights_ = true;
};

}  // namespace labyrinth
