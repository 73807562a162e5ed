#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tbc/exact_betweenness.hpp"

namespace tbc {

struct EvalReport {
  double sup_deviation = 0;
  double mse = 0;
  double weighted_kendall = 1;
  std::size_t topk_intersection = 0;
  std::size_t k = 0;
};

// Node ids ordered by decreasing score, ties by increasing id.
std::vector<std::size_t> ranking(std::span<const double> scores);

std::size_t topk_intersection(std::span<const double> a, std::span<const double> b, std::size_t k);

// Weighted Kendall tau with additive hyperbolic weights 1/(1 + rank), where
// rank comes from the lexicographic order on (x, y) (resp. (y, x)), ties by
// id; the result is the average of the two. Equals 1 when both inputs are
// constant and 0 when only one is.
double weighted_kendall_tau(std::span<const double> x, std::span<const double> y);

// Throws std::invalid_argument on mismatched length or optimality.
EvalReport compare(const ScoreVector& exact, const ScoreVector& approx, std::size_t k = 50);
EvalReport compare(std::span<const double> exact, std::span<const double> approx, std::size_t k = 50);

}  // namespace tbc
