#include "tbc/rademacher.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tbc {

RademacherState::RademacherState(std::size_t node_count)
    : sums_(node_count, 0.0), squares_(node_count, 0.0), touched_(node_count, 0) {}

void RademacherState::update(NodeId u, double h) {
  if (!(h >= 0.0 && h <= 1.0)) throw std::logic_error("function value outside [0, 1]");
  const double v = squares_[u];
  const double v1 = v + h * h;
  if (!touched_[u]) {
    // The node moves out of the implicit zero mass.
    touched_[u] = 1;
    ++touched_count_;
    ++norms_[v1];
  } else if (v1 != v) {
    ++norms_[v1];
    auto it = norms_.find(v);
    if (--it->second == 0) norms_.erase(it);
  }
  sums_[u] += h;
  squares_[u] = v1;
}

double rademacher_w(const std::map<double, std::uint64_t>& norms, std::uint64_t zeros,
                    std::uint64_t r, double s) {
  const double scale = s * s / (2.0 * static_cast<double>(r) * static_cast<double>(r));
  double top = zeros > 0 ? std::log(static_cast<double>(zeros)) : -INFINITY;
  for (const auto& [norm, count] : norms) {
    top = std::max(top, scale * norm + std::log(static_cast<double>(count)));
  }
  double acc = zeros > 0 ? static_cast<double>(zeros) * std::exp(-top) : 0.0;
  for (const auto& [norm, count] : norms) {
    acc += std::exp(scale * norm + std::log(static_cast<double>(count)) - top);
  }
  return (top + std::log(acc)) / s;
}

double rademacher_bound(const std::map<double, std::uint64_t>& norms, std::uint64_t zeros,
                        std::uint64_t r) {
  if (r == 0) throw std::invalid_argument("sample size must be positive");
  if (norms.empty() || norms.rbegin()->first == 0.0) return 0.0;
  constexpr double lo = 1e-4;
  constexpr double hi = 1e6;
  auto w = [&](double log_s) { return rademacher_w(norms, zeros, r, std::exp(log_s)); };

  std::vector<double> grid;
  for (double s = lo; s < hi; s *= 2) grid.push_back(std::log(s));
  grid.push_back(std::log(hi));
  std::size_t best = 0;
  double best_value = w(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double value = w(grid[i]);
    if (value < best_value) {
      best_value = value;
      best = i;
    }
  }
  double a = grid[best == 0 ? 0 : best - 1];
  double b = grid[std::min(best + 1, grid.size() - 1)];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double wc = w(c);
  double wd = w(d);
  for (int iter = 0; iter < 200 && b - a > 1e-13; ++iter) {
    if (wc < wd) {
      b = d;
      d = c;
      wd = wc;
      c = b - inv_phi * (b - a);
      wc = w(c);
    } else {
      a = c;
      c = d;
      wc = wd;
      d = a + inv_phi * (b - a);
      wd = w(d);
    }
  }
  return std::min({best_value, wc, wd});
}

double rademacher_bound(const RademacherState& state, std::uint64_t r) {
  return rademacher_bound(state.norms(), state.untouched(), r);
}

double stopping_xi(double R, std::uint64_t r, double delta_i) {
  if (r == 0) throw std::invalid_argument("sample size must be positive");
  if (!(delta_i > 0.0 && delta_i < 1.0)) throw std::invalid_argument("delta_i outside (0, 1)");
  const double rr = static_cast<double>(r);
  const double L = std::log(3.0 / delta_i);
  return 2.0 * R + (L + std::sqrt((L + 4.0 * rr * R) * L)) / rr + std::sqrt(L / (2.0 * rr));
}

}  // namespace tbc
