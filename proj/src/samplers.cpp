#include "tbc/samplers.hpp"

#include <algorithm>
#include <stdexcept>

#include "tbc/parallel.hpp"

namespace tbc {

namespace {

constexpr std::size_t kChunk = 256;

void require_pairs(const TemporalGraph& graph) {
  if (graph.node_count() < 2) throw std::invalid_argument("sampling needs at least two nodes");
}

void require_samples(std::uint64_t r) {
  if (r == 0) throw std::invalid_argument("sample size must be positive");
}

ScoreVector make_scores(Optimality opt, std::vector<double> values, std::uint64_t r) {
  ScoreVector out;
  out.optimality = opt;
  out.values = std::move(values);
  out.sample_size = r;
  return out;
}

// Exact: sum rationals then round once. Fast: sum doubles in sample order.
template <class Produce>
std::vector<double> average_sparse(std::size_t n, std::uint64_t r, Arithmetic arith, unsigned threads,
                                   double extra_scale, Produce produce) {
  std::vector<double> out(n, 0.0);
  if (arith == Arithmetic::Exact) {
    std::vector<Rational> sum(n);
    ordered_parallel_for(0, r, threads, kChunk, produce,
                         [&](std::uint64_t, std::vector<std::pair<NodeId, Rational>> values) {
                           for (auto& [v, h] : values) sum[v] += h;
                           return true;
                         });
    Rational scale(1);
    scale /= static_cast<unsigned long>(r);
    scale /= Rational(extra_scale);
    for (std::size_t v = 0; v < n; ++v) {
      if (sum[v] != 0) out[v] = Rational(sum[v] * scale).get_d();
    }
    return out;
  }
  std::vector<double> sum(n, 0.0);
  ordered_parallel_for(0, r, threads, kChunk, produce,
                       [&](std::uint64_t, std::vector<std::pair<NodeId, Rational>> values) {
                         for (auto& [v, h] : values) sum[v] += h.get_d();
                         return true;
                       });
  const double denom = static_cast<double>(r) * extra_scale;
  for (std::size_t v = 0; v < n; ++v) out[v] = sum[v] / denom;
  return out;
}

std::vector<std::pair<NodeId, Rational>> sparse_dependency(const TemporalGraph& graph, NodeId s,
                                                           Optimality opt) {
  auto dep = exact_dependency(full_tbfs(graph, s, opt));
  std::vector<std::pair<NodeId, Rational>> out;
  for (NodeId v = 0; v < dep.size(); ++v) {
    if (dep[v] != 0) out.emplace_back(v, std::move(dep[v]));
  }
  return out;
}

// Rtb in Fast arithmetic keeps per-source dependencies in doubles as well.
std::vector<double> rtb_fast(const TemporalGraph& graph, Optimality opt, std::uint64_t r,
                             unsigned threads, auto source_of) {
  const auto n = graph.node_count();
  std::vector<double> sum(n, 0.0);
  ordered_parallel_for(
      0, r, threads, 64,
      [&](std::uint64_t i) { return fast_dependency(full_tbfs(graph, source_of(i), opt)); },
      [&](std::uint64_t, std::vector<double> dep) {
        for (std::size_t v = 0; v < n; ++v) sum[v] += dep[v];
        return true;
      });
  const double denom = static_cast<double>(r) * static_cast<double>(n - 1);
  for (auto& x : sum) x /= denom;
  return sum;
}

}  // namespace

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::Rtb:
      return "rtb";
    case Algorithm::Ob:
      return "ob";
    case Algorithm::Trk:
      return "trk";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) {
  if (text == "rtb") return Algorithm::Rtb;
  if (text == "ob") return Algorithm::Ob;
  if (text == "trk") return Algorithm::Trk;
  return std::nullopt;
}

NodeId draw_source(SampleRng& rng, std::size_t n) { return static_cast<NodeId>(rng.below(n)); }

NodePair draw_pair(SampleRng& rng, std::size_t n) {
  const auto s = static_cast<NodeId>(rng.below(n));
  auto z = static_cast<NodeId>(rng.below(n - 1));
  if (z >= s) ++z;
  return {s, z};
}

std::vector<std::pair<NodeId, Rational>> pair_ratios(const TemporalGraph& graph, Optimality opt,
                                                     NodePair pair) {
  const auto result = truncated_tbfs(graph, pair.first, pair.second, opt);
  const auto dep = pair_dependency(result, pair.second);
  std::vector<std::pair<NodeId, Rational>> out;
  out.reserve(dep.through.size());
  for (std::size_t i = 0; i < dep.through.size(); ++i) {
    out.emplace_back(dep.through[i].first, dep.ratio(i));
  }
  return out;
}

TemporalPath sample_optimal_path(const TbfsResult& result, NodeId z, SampleRng& rng) {
  if (z >= result.sigma.size() || result.sigma[z] == 0) {
    throw std::logic_error("path sampling requested for an unreachable target");
  }
  const auto& recs = result.records;
  PathCount x = rng.below(result.sigma[z]);
  std::uint32_t cur = result.targets[z].back();
  for (const auto t : result.targets[z]) {
    if (x < recs[t].sigma) {
      cur = t;
      break;
    }
    x -= recs[t].sigma;
  }
  TemporalPath path;
  while (cur != 0) {
    const auto& preds = recs[cur].predecessors;
    PathCount y = rng.below(recs[cur].sigma);
    const Predecessor* chosen = &preds.back();
    for (const auto& p : preds) {
      if (y < recs[p.record].sigma) {
        chosen = &p;
        break;
      }
      y -= recs[p.record].sigma;
    }
    path.edges.push_back(chosen->edge);
    cur = chosen->record;
  }
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

Rational path_probability(const TemporalGraph& graph, const TbfsResult& result, NodeId z,
                          const TemporalPath& path) {
  if (path.edges.empty() || z >= result.sigma.size() || result.sigma[z] == 0) return Rational(0);
  const auto& recs = result.records;
  const auto steps = appearances(graph, result.source, path);
  if (steps.back().node != z) return Rational(0);

  std::optional<std::uint32_t> cur;
  for (const auto t : result.targets[z]) {
    if (recs[t].appearance == steps.back()) cur = t;
  }
  if (!cur) return Rational(0);
  auto fraction = [](const PathCount& a, const PathCount& b) {
    Rational q(a, b);
    q.canonicalize();
    return q;
  };
  Rational p = fraction(recs[*cur].sigma, result.sigma[z]);
  for (std::size_t k = path.edges.size(); k-- > 0;) {
    const auto& here = recs[*cur];
    const Predecessor* match = nullptr;
    for (const auto& pred : here.predecessors) {
      if (pred.edge == path.edges[k] && recs[pred.record].appearance == steps[k]) match = &pred;
    }
    if (!match) return Rational(0);
    p *= fraction(recs[match->record].sigma, here.sigma);
    cur = match->record;
  }
  return p;
}

std::vector<NodeId> trk_sample(const TemporalGraph& graph, Optimality opt, NodePair pair,
                               SampleRng& rng) {
  const auto result = truncated_tbfs(graph, pair.first, pair.second, opt);
  if (!result.reachable(pair.second)) return {};
  return internal_nodes(graph, sample_optimal_path(result, pair.second, rng));
}

ScoreVector rtb_estimate(const TemporalGraph& graph, const SamplerConfig& config) {
  require_pairs(graph);
  require_samples(config.sample_size);
  const auto n = graph.node_count();
  auto source_of = [&](std::uint64_t i) {
    SampleRng rng(config.seed, i);
    return draw_source(rng, n);
  };
  if (config.arithmetic == Arithmetic::Fast) {
    return make_scores(config.optimality,
                       rtb_fast(graph, config.optimality, config.sample_size, config.threads, source_of),
                       config.sample_size);
  }
  auto values = average_sparse(n, config.sample_size, Arithmetic::Exact, config.threads,
                               static_cast<double>(n - 1), [&](std::uint64_t i) {
                                 return sparse_dependency(graph, source_of(i), config.optimality);
                               });
  return make_scores(config.optimality, std::move(values), config.sample_size);
}

ScoreVector ob_estimate(const TemporalGraph& graph, const SamplerConfig& config) {
  require_pairs(graph);
  require_samples(config.sample_size);
  const auto n = graph.node_count();
  auto values = average_sparse(n, config.sample_size, config.arithmetic, config.threads, 1.0,
                               [&](std::uint64_t i) {
                                 SampleRng rng(config.seed, i);
                                 return pair_ratios(graph, config.optimality, draw_pair(rng, n));
                               });
  return make_scores(config.optimality, std::move(values), config.sample_size);
}

ScoreVector trk_estimate(const TemporalGraph& graph, const SamplerConfig& config) {
  require_pairs(graph);
  require_samples(config.sample_size);
  const auto n = graph.node_count();
  std::vector<std::uint64_t> hits(n, 0);
  ordered_parallel_for(
      0, config.sample_size, config.threads, kChunk,
      [&](std::uint64_t i) {
        SampleRng rng(config.seed, i);
        const auto pair = draw_pair(rng, n);
        return trk_sample(graph, config.optimality, pair, rng);
      },
      [&](std::uint64_t, std::vector<NodeId> internal) {
        for (const auto v : internal) ++hits[v];
        return true;
      });
  std::vector<double> values(n, 0.0);
  const auto r = static_cast<double>(config.sample_size);
  for (std::size_t v = 0; v < n; ++v) values[v] = static_cast<double>(hits[v]) / r;
  return make_scores(config.optimality, std::move(values), config.sample_size);
}

ScoreVector run_sampler(Algorithm algo, const TemporalGraph& graph, const SamplerConfig& config) {
  switch (algo) {
    case Algorithm::Rtb:
      return rtb_estimate(graph, config);
    case Algorithm::Ob:
      return ob_estimate(graph, config);
    case Algorithm::Trk:
      return trk_estimate(graph, config);
  }
  throw std::invalid_argument("unknown algorithm");
}

ScoreVector rtb_from_sources(const TemporalGraph& graph, Optimality opt,
                             std::span<const NodeId> sources, unsigned threads) {
  require_pairs(graph);
  require_samples(sources.size());
  auto values = average_sparse(graph.node_count(), sources.size(), Arithmetic::Exact, threads,
                               static_cast<double>(graph.node_count() - 1), [&](std::uint64_t i) {
                                 return sparse_dependency(graph, sources[i], opt);
                               });
  return make_scores(opt, std::move(values), sources.size());
}

ScoreVector ob_from_pairs(const TemporalGraph& graph, Optimality opt, std::span<const NodePair> pairs,
                          unsigned threads) {
  require_pairs(graph);
  require_samples(pairs.size());
  auto values = average_sparse(graph.node_count(), pairs.size(), Arithmetic::Exact, threads, 1.0,
                               [&](std::uint64_t i) { return pair_ratios(graph, opt, pairs[i]); });
  return make_scores(opt, std::move(values), pairs.size());
}

}  // namespace tbc
