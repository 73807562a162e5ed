#pragma once

#include <cstdint>

namespace tbc {

// ceil(ln(2n/delta) / (2 eps^2)): union bound over n nodes.
std::uint64_t hoeffding_size(double epsilon, double delta, std::uint64_t n);

// ceil((c/eps^2) (floor(log2(vd - 2)) + 1 + ln(1/delta))). For vd < 3 the
// bracket is 1 + ln(1/delta).
std::uint64_t vc_size(double epsilon, double delta, std::uint64_t vd, double c_univ = 0.5);

// First sample size of the progressive schedule:
// ceil((1 + 8 eps + sqrt(1 + 16 eps)) ln(6/delta) / (4 eps^2)).
std::uint64_t initial_sample_size(double epsilon, double delta);

// Throws std::invalid_argument unless 0 < x < 1.
void require_unit_open(double x, const char* name);

}  // namespace tbc
