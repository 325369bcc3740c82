#pragma once

#include "labyrinth/runner.hpp"
#include "labyrinth/world.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace labyrinth {

enum class CensusAlphabet { Exploration, Rendezvous };

/// Marker class of a single symbol: the number of traversals it certifies,
/// or nullopt if the symbol does not belong to the alphabet.
std::optional<int> marker_class(CensusAlphabet alphabet, Marker m);

struct EdgeCensus {
  EdgeId edge = 0;
  std::uint32_t traversals = 0;
  std::array<Marker, 2> markers{};
  /// Shared class of both passages; nullopt when they disagree.
  std::optional<int> marker_class;
};

struct MarkerCensus {
  std::vector<EdgeCensus> edges;
  /// First edge whose marker class differs from its traversal count.
  std::optional<EdgeId> offending;
  std::string detail;

  bool passed() const { return !offending; }
};

class CensusViolation : public std::runtime_error {
 public:
  CensusViolation(EdgeId edge, const std::string& what) : std::runtime_error(what), edge_(edge) {}
  EdgeId edge() const { return edge_; }

 private:
  EdgeId edge_;
};

/// Traversed k times <=> both passages carry class-k markers, for every edge.
MarkerCensus check_marker_census(const World& world, CensusAlphabet alphabet);
/// Same, throwing CensusViolation on the first offending edge.
void require_marker_census(const World& world, CensusAlphabet alphabet);

struct PathCheck {
  std::vector<EdgeId> once;
  std::string reason;

  bool passed() const { return reason.empty(); }
};

class PathViolation : public std::runtime_error {
 public:
  PathViolation(std::vector<EdgeId> edges, const std::string& what)
      : std::runtime_error(what), edges_(std::move(edges)) {}
  const std::vector<EdgeId>& edges() const { return edges_; }

 private:
  std::vector<EdgeId> edges_;
};

/// The edges traversed exactly once form one edge-disjoint trail from one
/// agent to the other: connected, containing both positions, odd degrees
/// exactly at the two positions (none when they coincide). Empty is
/// accepted only when the agents share a node.
PathCheck check_path_invariant(const World& world);
void require_path_invariant(const World& world);

struct TerminationCheck {
  std::string reason;
  bool passed() const { return reason.empty(); }
};

class TerminationViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exploration: agents share a node and every passage reads D after two
/// traversals of every edge. Dfs: every edge traversed twice. Rendezvous:
/// agents share a node, or the run ended on an edge meeting.
TerminationCheck check_termination(const World& world, const RunReport& report);
void require_termination(const World& world, const RunReport& report);

}  // namespace labyrinth
