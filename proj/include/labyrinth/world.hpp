#pragma once

#include "labyrinth/graph.hpp"
#include "labyrinth/marker.hpp"
#include "labyrinth/nav_table.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace labyrinth {

/// 0 is Ariadne (class A), 1 is Theseus (class T).
using AgentId = std::uint8_t;

/// One marker per passage, all initially Empty.
class Whiteboards {
 public:
  explicit Whiteboards(std::size_t passages = 0) : markers_(passages, Marker::Empty) {}

  Marker at(std::size_t passage_index) const { return markers_[passage_index]; }
  void set(std::size_t passage_index, Marker m) { markers_[passage_index] = m; }
  std::size_t size() const { return markers_.size(); }
  const std::vector<Marker>& raw() const { return markers_; }

  friend bool operator==(const Whiteboards&, const Whiteboards&) = default;

 private:
  std::vector<Marker> markers_;
};

/// Which agents have discovered each node. Monotone: bits are never cleared.
class DiscoveryLedger {
 public:
  explicit DiscoveryLedger(std::size_t nodes = 0) : bits_(nodes, 0) {}

  void discover(AgentId agent, NodeId node) { bits_.at(node) |= static_cast<std::uint8_t>(1u << agent); }
  bool discovered(DiscoveryClass c, NodeId node) const {
    const std::uint8_t b = bits_.at(node);
    switch (c) {
      case DiscoveryClass::A:
        return b & 1u;
      case DiscoveryClass::T:
        return b & 2u;
      case DiscoveryClass::Any:
        break;
    }
    return b != 0;
  }
  const std::vector<std::uint8_t>& raw() const { return bits_; }

  friend bool operator==(const DiscoveryLedger&, const DiscoveryLedger&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct AgentState {
  AgentId id = 0;
  NodeId at = 0;
  bool terminated = false;
  /// Passage through which the agent last entered `at`.
  std::optional<Passage> arrival;

  friend bool operator==(const AgentState&, const AgentState&) = default;
};

/// Everything a run mutates: whiteboards, discovery ledger, agent states,
/// plus the ground-truth traversal count of every edge (which agents cannot
/// see; the verifiers compare it against the markers).
class World {
 public:
  /// Agent i starts at starts[i]. Each start is marked discovered by its agent
  /// unless the matching `seed_discovery` entry is false.
  World(std::shared_ptr<const Graph> graph, const std::vector<NodeId>& starts,
        const std::vector<bool>& seed_discovery = {});

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }

  Marker marker(Passage p) const { return boards_.at(graph_->passage_index(p)); }
  void set_marker(Passage p, Marker m) { boards_.set(graph_->passage_index(p), m); }
  const Whiteboards& boards() const { return boards_; }

  DiscoveryLedger& ledger() { return ledger_; }
  const DiscoveryLedger& ledger() const { return ledger_; }

  std::size_t agent_count() const { return agents_.size(); }
  AgentState& agent(AgentId id) { return agents_.at(id); }
  const AgentState& agent(AgentId id) const { return agents_.at(id); }
  const std::vector<AgentState>& agents() const { return agents_; }

  std::uint32_t traversals(EdgeId e) const { return traversals_.at(e); }
  void count_traversal(EdgeId e) { ++traversals_.at(e); }
  const std::vector<std::uint32_t>& traversal_counts() const { return traversals_; }

  bool all_terminated() const;

  /// Compact byte encoding of the full mutable state, used as a memo key.
  std::string state_key() const;

 private:
  std::shared_ptr<const Graph> graph_;
  Whiteboards boards_;
  DiscoveryLedger ledger_;
  std::vector<AgentState> agents_;
  std::vector<std::uint32_t> traversals_;
};

/// True iff every agent stands on the same node.
bool colocated(const World& world);

}  // namespace labyrinth
