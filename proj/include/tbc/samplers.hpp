#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "tbc/exact_betweenness.hpp"
#include "tbc/path_enumeration.hpp"
#include "tbc/rng.hpp"
#include "tbc/tbfs.hpp"

namespace tbc {

enum class Algorithm { Rtb, Ob, Trk };

std::string_view to_string(Algorithm algo);
std::optional<Algorithm> parse_algorithm(std::string_view text);

struct SamplerConfig {
  Optimality optimality = Optimality::Shortest;
  std::uint64_t sample_size = 1;
  std::uint64_t seed = 0;
  Arithmetic arithmetic = Arithmetic::Exact;
  unsigned threads = 0;
};

using NodePair = std::pair<NodeId, NodeId>;

// Uniform source in [0, n).
NodeId draw_source(SampleRng& rng, std::size_t n);
// Uniform ordered pair of distinct nodes; n >= 2.
NodePair draw_pair(SampleRng& rng, std::size_t n);

// Per-sample function values of one pair: sigma_sz(v)/sigma_sz for every v
// internal to an optimal s->z path. Empty when z is unreachable.
std::vector<std::pair<NodeId, Rational>> pair_ratios(const TemporalGraph& graph, Optimality opt,
                                                     NodePair pair);

// Draws one optimal s->z path uniformly at random from the DAG of a search
// from s. Throws std::logic_error when z is unreachable.
TemporalPath sample_optimal_path(const TbfsResult& result, NodeId z, SampleRng& rng);

// Probability that sample_optimal_path returns `path`, as an exact rational.
Rational path_probability(const TemporalGraph& graph, const TbfsResult& result, NodeId z,
                          const TemporalPath& path);

// Internal nodes of one random optimal path between a drawn pair.
std::vector<NodeId> trk_sample(const TemporalGraph& graph, Optimality opt, NodePair pair,
                               SampleRng& rng);

ScoreVector rtb_estimate(const TemporalGraph& graph, const SamplerConfig& config);
ScoreVector ob_estimate(const TemporalGraph& graph, const SamplerConfig& config);
ScoreVector trk_estimate(const TemporalGraph& graph, const SamplerConfig& config);
ScoreVector run_sampler(Algorithm algo, const TemporalGraph& graph, const SamplerConfig& config);

// Same estimators over an explicit sample (e.g. every source or every pair).
ScoreVector rtb_from_sources(const TemporalGraph& graph, Optimality opt,
                             std::span<const NodeId> sources, unsigned threads = 0);
ScoreVector ob_from_pairs(const TemporalGraph& graph, Optimality opt, std::span<const NodePair> pairs,
                          unsigned threads = 0);

}  // namespace tbc
