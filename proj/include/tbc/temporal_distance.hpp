#pragma once

#include <cstdint>
#include <vector>

#include "tbc/temporal_graph.hpp"

namespace tbc {

struct DistanceOptions {
  // Number of sampled sources; >= n means every node once.
  std::uint64_t samples = 1;
  double tau = 0.9;
  std::uint64_t seed = 0;
  bool without_replacement = false;
  unsigned threads = 0;
};

struct DistanceSummary {
  std::uint32_t diameter = 0;
  std::uint32_t effective_diameter = 0;
  // Linear interpolation between the two hop counts around the tau quantile.
  double effective_diameter_interpolated = 0;
  double tau = 0;
  double connectivity_rate = 0;
  double avg_distance = 0;
  bool avg_distance_defined = false;
  // Estimated number of ordered pairs (u, v) at hop distance <= h, self
  // pairs included; R[0] = n.
  std::vector<double> reach_profile;
  std::uint64_t sample_size = 0;
  bool census = false;
};

// dd[h]: nodes whose shortest strict temporal distance from s is h; dd[0] = 1.
std::vector<std::uint64_t> hop_histogram(const TemporalGraph& graph, NodeId s);

DistanceSummary estimate_distances(const TemporalGraph& graph, const DistanceOptions& options);

// ceil(ln(n) / eps^2).
std::uint64_t recommended_sample_size(std::uint64_t n, double epsilon);

}  // namespace tbc
