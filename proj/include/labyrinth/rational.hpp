#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace labyrinth {

/// Exact edge lengths, costs and times. Bounds such as "cost <= 2L" are
/// compared without rounding.
using Rational = boost::rational<std::int64_t>;

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Accepts "p", "p/q" and "-p/q". Returns nullopt on anything else,
/// including a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace labyrinth
