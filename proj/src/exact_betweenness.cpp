#include "tbc/exact_betweenness.hpp"

#include <string>

#include "tbc/parallel.hpp"
#include "tbc/tbfs.hpp"

namespace tbc {

double estimate_exact_work(const TemporalGraph& graph, Optimality opt) {
  const double n = static_cast<double>(graph.node_count());
  double per_source = static_cast<double>(graph.edge_count());
  if (opt != Optimality::PrefixForemost) {
    for (std::size_t slot = 0; slot < graph.slot_count(); ++slot) {
      per_source += static_cast<double>(graph.out_edges_after(slot).size());
    }
  }
  return n * per_source;
}

std::vector<Rational> total_dependency(const TemporalGraph& graph, Optimality opt, unsigned threads) {
  const auto n = graph.node_count();
  std::vector<Rational> total(n);
  ordered_parallel_for(
      0, n, threads, 64,
      [&](std::uint64_t s) { return exact_dependency(full_tbfs(graph, static_cast<NodeId>(s), opt)); },
      [&](std::uint64_t, std::vector<Rational> dep) {
        for (std::size_t v = 0; v < n; ++v) {
          if (dep[v] != 0) total[v] += dep[v];
        }
        return true;
      });
  return total;
}

std::vector<double> normalize(const std::vector<Rational>& totals) {
  const auto n = totals.size();
  std::vector<double> out(n, 0.0);
  if (n <= 1) return out;
  const Rational scale(1, static_cast<unsigned long>(n * (n - 1)));
  for (std::size_t v = 0; v < n; ++v) out[v] = Rational(totals[v] * scale).get_d();
  return out;
}

ScoreVector exact_tbc(const TemporalGraph& graph, Optimality opt, const ExactOptions& options) {
  if (options.max_work > 0) {
    const double work = estimate_exact_work(graph, opt);
    if (work > options.max_work) {
      throw GuardrailExceeded("estimated work " + std::to_string(work) + " exceeds limit " +
                              std::to_string(options.max_work));
    }
  }
  ScoreVector out;
  out.optimality = opt;
  const auto n = graph.node_count();
  if (options.arithmetic == Arithmetic::Exact) {
    out.values = normalize(total_dependency(graph, opt, options.threads));
    return out;
  }
  std::vector<double> total(n, 0.0);
  ordered_parallel_for(
      0, n, options.threads, 64,
      [&](std::uint64_t s) { return fast_dependency(full_tbfs(graph, static_cast<NodeId>(s), opt)); },
      [&](std::uint64_t, std::vector<double> dep) {
        for (std::size_t v = 0; v < n; ++v) total[v] += dep[v];
        return true;
      });
  out.values.assign(n, 0.0);
  if (n > 1) {
    const double scale = static_cast<double>(n) * static_cast<double>(n - 1);
    for (std::size_t v = 0; v < n; ++v) out.values[v] = total[v] / scale;
  }
  return out;
}

}  // namespace tbc
