#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tbc {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
// Relabeled time label. 0 is reserved for the source sentinel appearance (s, 0).
using Time = std::uint32_t;

// Path counts grow exponentially with path length on dense temporal graphs.
using PathCount = mpz_class;
using Rational = mpq_class;

// The three temporal path optimality criteria that admit polynomial counting.
enum class Optimality { Shortest, ShortestForemost, PrefixForemost };

std::string_view to_string(Optimality opt);
std::optional<Optimality> parse_optimality(std::string_view text);

struct VertexAppearance {
  NodeId node = 0;
  Time time = 0;

  friend bool operator==(const VertexAppearance&, const VertexAppearance&) = default;
  friend auto operator<=>(const VertexAppearance&, const VertexAppearance&) = default;
};

// Which number system dependency sums are carried in. Exact keeps rationals
// until the score boundary; Fast uses doubles throughout (large graphs).
enum class Arithmetic { Exact, Fast };

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace tbc
