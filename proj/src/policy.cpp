#include "labyrinth/policy.hpp"

namespace labyrinth {

AdversaryPolicy AdversaryPolicy::round_robin() { return AdversaryPolicy(Kind::RoundRobin); }

AdversaryPolicy AdversaryPolicy::random(std::uint64_t seed) {
  AdversaryPolicy p(Kind::Random);
  p.seed_ = seed;
  p.rng_ = Rng(seed);
  return p;
}

AdversaryPolicy AdversaryPolicy::fixed(Schedule schedule, std::optional<AdversaryPolicy> fallback) {
  AdversaryPolicy p(Kind::Fixed);
  p.schedule_ = std::move(schedule);
  if (fallback) p.fallback_ = std::make_unique<AdversaryPolicy>(std::move(*fallback));
  return p;
}

AdversaryPolicy AdversaryPolicy::greedy_starver(AgentId favored) {
  AdversaryPolicy p(Kind::GreedyStarver);
  p.favored_ = favored;
  return p;
}

AdversaryPolicy::AdversaryPolicy(const AdversaryPolicy& other)
    : kind_(other.kind_),
      seed_(other.seed_),
      rng_(other.rng_),
      cursor_(other.cursor_),
      favored_(other.favored_),
      schedule_(other.schedule_),
      position_(other.position_),
      fallback_(other.fallback_ ? std::make_unique<AdversaryPolicy>(*other.fallback_) : nullptr) {}

AdversaryPolicy& AdversaryPolicy::operator=(const AdversaryPolicy& other) {
  if (this != &other) *this = AdversaryPolicy(other);
  return *this;
}

AdversaryPolicy::~AdversaryPolicy() = default;

std::string AdversaryPolicy::describe() const {
  switch (kind_) {
    case Kind::RoundRobin:
      return "rr";
    case Kind::Random:
      return "random(" + std::to_string(seed_) + ")";
    case Kind::Fixed:
      return "fixed(" + std::to_string(schedule_.turns.size()) + (fallback_ ? "," + fallback_->describe() : "") + ")";
    case Kind::GreedyStarver:
      return "starve(" + std::to_string(favored_) + ")";
  }
  return "?";
}

std::optional<AgentId> AdversaryPolicy::next(const World& world, const std::vector<bool>& active) {
  const std::size_t n = world.agent_count();
  std::vector<AgentId> live;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < active.size() && active[i]) live.push_back(static_cast<AgentId>(i));
  }
  if (live.empty()) return std::nullopt;

  switch (kind_) {
    case Kind::RoundRobin:
      for (std::size_t k = 0; k < n; ++k) {
        const auto id = static_cast<AgentId>((cursor_ + k) % n);
        if (active[id]) {
          cursor_ = static_cast<AgentId>((id + 1) % n);
          return id;
        }
      }
      return std::nullopt;
    case Kind::Random:
      return live[rng_.below(live.size())];
    case Kind::GreedyStarver:
      if (favored_ < n && active[favored_]) return favored_;
      return live.front();
    case Kind::Fixed:
      while (position_ < schedule_.turns.size()) {
        const AgentId id = schedule_.turns[position_++];
        if (id < n && active[id]) return id;
      }
      if (fallback_) return fallback_->next(world, active);
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace labyrinth
