#pragma once

#include "labyrinth/rational.hpp"

#include <string>
#include <vector>

namespace labyrinth {

/// One certified inequality (or equality): `observed <= bound` or
/// `observed == bound`.
struct BoundCheck {
  enum class Relation { AtMost, Exactly };

  std::string name;
  Rational observed{0};
  Rational bound{0};
  Relation relation = Relation::AtMost;

  bool passed() const { return relation == Relation::Exactly ? observed == bound : observed <= bound; }
};

BoundCheck at_most(std::string name, Rational observed, Rational bound);
BoundCheck exactly(std::string name, Rational observed, Rational bound);

/// `CHECK <name> <observed> <bound> <PASS|FAIL>`
std::string format_check(const BoundCheck& check);

/// All lines, newline-terminated.
std::string format_checks(const std::vector<BoundCheck>& checks);

bool all_passed(const std::vector<BoundCheck>& checks);

}  // namespace labyrinth
