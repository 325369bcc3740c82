#pragma once

#include "labyrinth/random.hpp"
#include "labyrinth/schedule.hpp"
#include "labyrinth/world.hpp"

#include <memory>
#include <optional>
#include <string>

namespace labyrinth {

/// Concrete adversaries for the asynchronous model. `next` only ever returns
/// an agent that is still active (not terminated and allowed to move).
class AdversaryPolicy {
 public:
  enum class Kind { RoundRobin, Random, Fixed, GreedyStarver };

  static AdversaryPolicy round_robin();
  static AdversaryPolicy random(std::uint64_t seed);
  /// Replays `schedule`, skipping turns of inactive agents. Once exhausted,
  /// defers to `fallback`, or reports exhaustion when there is none.
  static AdversaryPolicy fixed(Schedule schedule, std::optional<AdversaryPolicy> fallback = std::nullopt);
  /// Keeps activating `favored` until it terminates, then the other agent.
  static AdversaryPolicy greedy_starver(AgentId favored = 0);

  AdversaryPolicy(const AdversaryPolicy& other);
  AdversaryPolicy& operator=(const AdversaryPolicy& other);
  AdversaryPolicy(AdversaryPolicy&&) noexcept = default;
  AdversaryPolicy& operator=(AdversaryPolicy&&) noexcept = default;
  ~AdversaryPolicy();

  Kind kind() const { return kind_; }
  std::string describe() const;

  /// nullopt when no agent is active, or a fixed schedule without fallback
  /// has run out.
  std::optional<AgentId> next(const World& world, const std::vector<bool>& active);

 private:
  explicit AdversaryPolicy(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::uint64_t seed_ = 0;
  Rng rng_{0};
  AgentId cursor_ = 0;
  AgentId favored_ = 0;
  Schedule schedule_;
  std::size_t position_ = 0;
  std::unique_ptr<AdversaryPolicy> fallback_;
};

}  // namespace labyrinth
