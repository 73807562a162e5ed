#include "tbc/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tbc {

namespace {

int sign(double a, double b) { return (a > b) - (a < b); }

// Order positions by decreasing (primary, secondary), ties by id.
std::vector<std::size_t> lexicographic_order(std::span<const double> primary,
                                             std::span<const double> secondary) {
  std::vector<std::size_t> order(primary.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (primary[a] != primary[b]) return primary[a] > primary[b];
    return secondary[a] > secondary[b];
  });
  return order;
}

double projected_tau(std::span<const double> x, std::span<const double> y,
                     const std::vector<std::size_t>& order) {
  const auto n = x.size();
  std::vector<double> weight(n);
  for (std::size_t r = 0; r < n; ++r) weight[order[r]] = 1.0 / (1.0 + static_cast<double>(r));
  double concord = 0, x_mass = 0, y_mass = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double w = weight[i] + weight[j];
      const int sx = sign(x[i], x[j]);
      const int sy = sign(y[i], y[j]);
      concord += w * sx * sy;
      x_mass += w * (sx != 0);
      y_mass += w * (sy != 0);
    }
  }
  return concord / std::sqrt(x_mass * y_mass);
}

bool constant(std::span<const double> v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

}  // namespace

std::vector<std::size_t> ranking(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return order;
}

std::size_t topk_intersection(std::span<const double> a, std::span<const double> b, std::size_t k) {
  k = std::min(k, std::min(a.size(), b.size()));
  auto ra = ranking(a);
  auto rb = ranking(b);
  ra.resize(k);
  rb.resize(k);
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  std::vector<std::size_t> common;
  std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(common));
  return common.size();
}

double weighted_kendall_tau(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("score vectors differ in length");
  const bool cx = constant(x);
  const bool cy = constant(y);
  if (cx || cy) return cx && cy ? 1.0 : 0.0;
  return 0.5 * (projected_tau(x, y, lexicographic_order(x, y)) +
                projected_tau(x, y, lexicographic_order(y, x)));
}

EvalReport compare(std::span<const double> exact, std::span<const double> approx, std::size_t k) {
  if (exact.size() != approx.size()) throw std::invalid_argument("score vectors differ in length");
  EvalReport out;
  out.k = std::min(k, exact.size());
  double sq = 0;
  for (std::size_t v = 0; v < exact.size(); ++v) {
    const double d = std::abs(exact[v] - approx[v]);
    out.sup_deviation = std::max(out.sup_deviation, d);
    sq += d * d;
  }
  out.mse = exact.empty() ? 0.0 : sq / static_cast<double>(exact.size());
  out.weighted_kendall = weighted_kendall_tau(exact, approx);
  out.topk_intersection = topk_intersection(exact, approx, k);
  return out;
}

EvalReport compare(const ScoreVector& exact, const ScoreVector& approx, std::size_t k) {
  if (exact.optimality != approx.optimality) throw std::invalid_argument("optimality mismatch");
  return compare(exact.values, approx.values, k);
}

}  // namespace tbc
