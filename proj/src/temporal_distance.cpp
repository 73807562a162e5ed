#include "tbc/temporal_distance.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tbc/parallel.hpp"
#include "tbc/rng.hpp"

namespace tbc {

std::vector<std::uint64_t> hop_histogram(const TemporalGraph& graph, NodeId s) {
  std::vector<char> slot_seen(graph.slot_count(), 0);
  std::vector<char> settled(graph.node_count(), 0);
  std::vector<std::uint64_t> dd{1};
  settled[s] = 1;
  std::vector<std::size_t> layer;
  bool first = true;
  while (first || !layer.empty()) {
    std::vector<std::size_t> next;
    std::uint64_t fresh = 0;
    auto relax = [&](std::span<const EdgeId> edges) {
      for (const EdgeId id : edges) {
        const auto& e = graph.edge(id);
        if (e.dst == s) continue;
        const auto slot = graph.arrival_slot(id);
        if (slot_seen[slot]) continue;
        slot_seen[slot] = 1;
        next.push_back(slot);
        if (!settled[e.dst]) {
          settled[e.dst] = 1;
          ++fresh;
        }
      }
    };
    if (first) {
      relax(graph.out_edges(s));
      first = false;
    } else {
      for (const auto slot : layer) relax(graph.out_edges_after(slot));
    }
    if (next.empty()) break;
    dd.push_back(fresh);
    layer = std::move(next);
  }
  while (dd.size() > 1 && dd.back() == 0) dd.pop_back();
  return dd;
}

DistanceSummary estimate_distances(const TemporalGraph& graph, const DistanceOptions& options) {
  if (options.samples == 0) throw std::invalid_argument("sample size must be positive");
  if (!(options.tau > 0.0 && options.tau <= 1.0)) throw std::invalid_argument("tau must lie in (0, 1]");
  const auto n = graph.node_count();
  DistanceSummary out;
  out.tau = options.tau;
  if (n == 0) return out;

  std::vector<NodeId> sources;
  if (options.samples >= n) {
    out.census = true;
    sources.resize(n);
    std::iota(sources.begin(), sources.end(), NodeId{0});
  } else if (options.without_replacement) {
    std::vector<NodeId> pool(n);
    std::iota(pool.begin(), pool.end(), NodeId{0});
    SampleRng rng(options.seed, 0);
    for (std::uint64_t i = 0; i < options.samples; ++i) {
      std::swap(pool[i], pool[i + rng.below(n - i)]);
    }
    sources.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(options.samples));
  } else {
    for (std::uint64_t i = 0; i < options.samples; ++i) {
      SampleRng rng(options.seed, i);
      sources.push_back(static_cast<NodeId>(rng.below(n)));
    }
  }
  const auto s = sources.size();
  out.sample_size = s;

  std::vector<std::uint64_t> dd;
  ordered_parallel_for(
      0, s, options.threads, 256, [&](std::uint64_t i) { return hop_histogram(graph, sources[i]); },
      [&](std::uint64_t, std::vector<std::uint64_t> local) {
        if (local.size() > dd.size()) dd.resize(local.size(), 0);
        for (std::size_t h = 0; h < local.size(); ++h) dd[h] += local[h];
        return true;
      });

  const auto D = static_cast<std::uint32_t>(dd.size() - 1);
  out.diameter = D;
  const double scale = static_cast<double>(n) / static_cast<double>(s);
  std::uint64_t acc = 0;
  for (const auto count : dd) {
    acc += count;
    out.reach_profile.push_back(scale * static_cast<double>(acc));
  }

  // Pair statistics exclude the self pairs counted at h = 0.
  const std::uint64_t pairs = acc - dd[0];
  out.connectivity_rate =
      n > 1 ? static_cast<double>(pairs) / (static_cast<double>(s) * static_cast<double>(n - 1)) : 0.0;
  if (pairs == 0) return out;

  double weighted = 0;
  for (std::uint32_t h = 1; h <= D; ++h) weighted += static_cast<double>(dd[h]) * h;
  out.avg_distance = weighted / static_cast<double>(pairs);
  out.avg_distance_defined = true;

  std::uint64_t within = 0;
  double previous = 0;
  for (std::uint32_t h = 1; h <= D; ++h) {
    within += dd[h];
    const double fraction = static_cast<double>(within) / static_cast<double>(pairs);
    if (fraction >= options.tau) {
      out.effective_diameter = h;
      out.effective_diameter_interpolated = (h - 1) + (options.tau - previous) / (fraction - previous);
      break;
    }
    previous = fraction;
  }
  return out;
}

std::uint64_t recommended_sample_size(std::uint64_t n, double epsilon) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  return static_cast<std::uint64_t>(std::ceil(std::log(static_cast<double>(n)) / (epsilon * epsilon)));
}

}  // namespace tbc
