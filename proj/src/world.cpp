#include "labyrinth/world.hpp"

#include <stdexcept>

namespace labyrinth {

World::World(std::shared_ptr<const Graph> graph, const std::vector<NodeId>& starts,
             const std::vector<bool>& seed_discovery)
    : graph_(std::move(graph)),
      boards_(graph_->passage_count()),
      ledger_(graph_->node_count()),
      traversals_(graph_->edge_count(), 0) {
  if (starts.empty() || starts.size() > 2) throw std::invalid_argument("a world holds one or two agents");
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (starts[i] >= graph_->node_count()) {
      throw std::invalid_argument("start node " + std::to_string(starts[i]) + " is not in the graph");
    }
    const auto id = static_cast<AgentId>(i);
    agents_.push_back(AgentState{id, starts[i], false, std::nullopt});
    if (i >= seed_discovery.size() || seed_discovery[i]) ledger_.discover(id, starts[i]);
  }
}

bool World::all_terminated() const {
  for (const auto& a : agents_) {
    if (!a.terminated) return false;
  }
  return true;
}

std::string World::state_key() const {
  std::string key;
  key.reserve(boards_.size() + ledger_.raw().size() + traversals_.size() + 8 * agents_.size());
  for (Marker m : boards_.raw()) key.push_back(static_cast<char>(m));
  for (std::uint8_t b : ledger_.raw()) key.push_back(static_cast<char>(b));
  for (std::uint32_t t : traversals_) key.push_back(static_cast<char>(t));
  for (const auto& a : agents_) {
    for (int shift = 0; shift < 32; shift += 8) key.push_back(static_cast<char>((a.at >> shift) & 0xFF));
    key.push_back(a.terminated ? 1 : 0);
  }
  return key;
}

bool colocated(const World& world) {
  const auto& agents = world.agents();
  for (const auto& a : agents) {
    if (a.at != agents.front().at) return false;
  }
  return true;
}

}  // namespace labyrinth
