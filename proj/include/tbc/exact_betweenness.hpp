#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tbc/temporal_graph.hpp"
#include "tbc/types.hpp"

namespace tbc {

struct ScoreVector {
  Optimality optimality = Optimality::Shortest;
  std::vector<double> values;
  bool normalized = true;
  std::optional<std::uint64_t> sample_size;
};

class GuardrailExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactOptions {
  Arithmetic arithmetic = Arithmetic::Exact;
  unsigned threads = 0;
  // Refuse to run when estimate_exact_work exceeds this; 0 disables.
  double max_work = 0;
};

// Rough count of edge relaxations an all-sources run performs.
double estimate_exact_work(const TemporalGraph& graph, Optimality opt);

// Unnormalized sum of dependencies over all sources, exact.
std::vector<Rational> total_dependency(const TemporalGraph& graph, Optimality opt,
                                       unsigned threads = 0);

ScoreVector exact_tbc(const TemporalGraph& graph, Optimality opt, const ExactOptions& options = {});

// Divides by n(n-1); zero vector for n <= 1.
std::vector<double> normalize(const std::vector<Rational>& totals);

}  // namespace tbc
