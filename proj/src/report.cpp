#include "labyrinth/report.hpp"

#include <algorithm>

namespace labyrinth {

BoundCheck at_most(std::string name, Rational observed, Rational bound) {
  return BoundCheck{std::move(name), observed, bound, BoundCheck::Relation::AtMost};
}

BoundCheck exactly(std::string name, Rational observed, Rational bound) {
  return BoundCheck{std::move(name), observed, bound, BoundCheck::Relation::Exactly};
}

std::string format_check(const BoundCheck& check) {
  return "CHECK " + check.name + " " + to_string(check.observed) + " " + to_string(check.bound) + " " +
         (check.passed() ? "PASS" : "FAIL");
}

std::string format_checks(const std::vector<BoundCheck>& checks) {
  std::string out;
  for (const auto& c : checks) out += format_check(c) + "\n";
  return out;
}

bool all_passed(const std::vector<BoundCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.passed(); });
}

}  // namespace labyrinth
