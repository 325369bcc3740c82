#include "labyrinth/nav_table.hpp"

namespace labyrinth {

namespace {

std::string_view class_suffix(DiscoveryClass c) {
  switch (c) {
    case DiscoveryClass::A:
      return ":A";
    case DiscoveryClass::T:
      return ":T";
    case DiscoveryClass::Any:
      break;
  }
  return "";
}

}  // namespace

std::string to_string(const Condition& c) {
  switch (c.kind) {
    case Condition::Kind::Any:
      return "any";
    case Condition::Kind::ArrivalMarker:
      return std::string(spelling(c.marker));
    case Condition::Kind::Discovered:
      return "disc" + std::string(class_suffix(c.discovery));
    case Condition::Kind::Undiscovered:
      return "undisc" + std::string(class_suffix(c.discovery));
  }
  return "?";
}

NavigationTable::NavigationTable(std::string name, std::vector<NavRow> rows, std::set<Marker> alphabet)
    : name_(std::move(name)), rows_(std::move(rows)), alphabet_(std::move(alphabet)) {
  if (rows_.empty()) throw TableError(name_ + ": navigation table has no rows");
  auto check = [&](Marker m, std::size_t row) {
    if (!alphabet_.count(m)) {
      throw TableError(name_ + ": row " + std::to_string(row) + " uses " + std::string(spelling(m)) +
                       " outside the declared alphabet");
    }
  };
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const NavRow& r = rows_[i];
    check(r.read_u, i);
    if (r.write_u) check(*r.write_u, i);
    if (r.write_v) check(*r.write_v, i);
    if (r.cond_v.kind == Condition::Kind::ArrivalMarker) check(r.cond_v.marker, i);
  }
}

std::string NavigationTable::dump() const {
  std::string out;
  auto opt = [](const std::optional<Marker>& m) { return m ? std::string(spelling(*m)) : std::string("-"); };
  for (const NavRow& r : rows_) {
    out += std::string(spelling(r.read_u)) + " " + opt(r.write_u) + " " + to_string(r.cond_v) + " " +
           opt(r.write_v) + "\n";
  }
  return out;
}

}  // namespace labyrinth
