#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tbc/exact_betweenness.hpp"
#include "tbc/rademacher.hpp"
#include "tbc/samplers.hpp"

namespace tbc {

// Geometric schedule |S_i| = ceil(alpha^(i-1) |S_1|), i >= 1, with
// confidence budget delta / 2^i per check.
class Schedule {
 public:
  Schedule(std::uint64_t initial, double alpha);

  std::uint64_t initial() const noexcept { return initial_; }
  double alpha() const noexcept { return alpha_; }
  // Strictly increasing in i.
  std::uint64_t size(std::uint32_t i) const;
  static double delta_at(double delta, std::uint32_t i);

 private:
  std::uint64_t initial_;
  double alpha_;
};

enum class StopReason { BoundMet, IterationCap };
std::string_view to_string(StopReason reason);

struct StopReport {
  std::uint64_t final_sample_size = 0;
  std::uint32_t iterations = 0;
  double xi = 0;
  double epsilon = 0;
  double rademacher = 0;
  StopReason stopped_by = StopReason::BoundMet;
  std::optional<std::uint64_t> cap;
  // Sample sizes at which the bound was evaluated.
  std::vector<std::uint64_t> checkpoints;
  // p-rtb only: largest summed dependency and the c * n threshold.
  std::optional<double> max_total;
  std::optional<double> threshold;
};

struct ProgressiveConfig {
  Optimality optimality = Optimality::Shortest;
  Algorithm algorithm = Algorithm::Ob;
  double epsilon = 0.1;
  double delta = 0.1;
  double alpha = 1.5;
  std::uint64_t seed = 0;
  // Trk defaults to the Hoeffding size when unset.
  std::optional<std::uint64_t> iteration_cap;
  unsigned threads = 0;
};

struct ProgressiveResult {
  ScoreVector scores;
  StopReport report;
};

// Samples pairs along the schedule until the Rademacher deviation bound drops
// to epsilon. Supports Algorithm::Ob and Algorithm::Trk.
ProgressiveResult progressive_estimate(const TemporalGraph& graph, const ProgressiveConfig& config);

struct PrtbConfig {
  Optimality optimality = Optimality::Shortest;
  double c = 2.0;
  std::uint64_t seed = 0;
  std::uint64_t max_samples = 1'000'000;
  Arithmetic arithmetic = Arithmetic::Exact;
  unsigned threads = 0;
};

// Samples sources (same sequence as rtb_estimate) until the largest summed
// dependency reaches c * n, checked after every sample.
ProgressiveResult prtb_estimate(const TemporalGraph& graph, const PrtbConfig& config);

}  // namespace tbc
