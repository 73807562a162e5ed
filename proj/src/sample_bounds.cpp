#include "tbc/sample_bounds.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tbc {

void require_unit_open(double x, const char* name) {
  if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument(std::string(name) + " must lie in (0, 1)");
}

std::uint64_t hoeffding_size(double epsilon, double delta, std::uint64_t n) {
  require_unit_open(epsilon, "epsilon");
  require_unit_open(delta, "delta");
  if (n == 0) throw std::invalid_argument("n must be positive");
  const double value = std::log(2.0 * static_cast<double>(n) / delta) / (2.0 * epsilon * epsilon);
  return static_cast<std::uint64_t>(std::ceil(value));
}

std::uint64_t vc_size(double epsilon, double delta, std::uint64_t vd, double c_univ) {
  require_unit_open(epsilon, "epsilon");
  require_unit_open(delta, "delta");
  if (!(c_univ > 0.0)) throw std::invalid_argument("universal constant must be positive");
  const double floor_log = vd >= 3 ? static_cast<double>(std::bit_width(vd - 2) - 1) : 0.0;
  const double bracket = vd >= 3 ? floor_log + 1.0 + std::log(1.0 / delta) : 1.0 + std::log(1.0 / delta);
  return static_cast<std::uint64_t>(std::ceil(c_univ / (epsilon * epsilon) * bracket));
}

std::uint64_t initial_sample_size(double epsilon, double delta) {
  require_unit_open(epsilon, "epsilon");
  require_unit_open(delta, "delta");
  const double value = (1.0 + 8.0 * epsilon + std::sqrt(1.0 + 16.0 * epsilon)) *
                       std::log(6.0 / delta) / (4.0 * epsilon * epsilon);
  return static_cast<std::uint64_t>(std::ceil(value));
}

}  // namespace tbc
