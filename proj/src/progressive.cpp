#include "tbc/progressive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tbc/parallel.hpp"
#include "tbc/sample_bounds.hpp"

namespace tbc {

Schedule::Schedule(std::uint64_t initial, double alpha) : initial_(initial), alpha_(alpha) {
  if (initial == 0) throw std::invalid_argument("initial sample size must be positive");
  if (!(alpha > 1.0)) throw std::invalid_argument("alpha must exceed 1");
}

std::uint64_t Schedule::size(std::uint32_t i) const {
  if (i == 0) throw std::invalid_argument("schedule index starts at 1");
  std::uint64_t size = initial_;
  long double grown = initial_;
  for (std::uint32_t k = 2; k <= i; ++k) {
    grown *= alpha_;
    // Guard against alpha^k * |S_1| landing a hair above an integer.
    const auto next = static_cast<std::uint64_t>(std::ceil(grown * (1.0L - 1e-15L)));
    size = std::max(size + 1, next);
  }
  return size;
}

double Schedule::delta_at(double delta, std::uint32_t i) { return std::ldexp(delta, -static_cast<int>(i)); }

std::string_view to_string(StopReason reason) {
  return reason == StopReason::BoundMet ? "bound_met" : "iteration_cap";
}

ProgressiveResult progressive_estimate(const TemporalGraph& graph, const ProgressiveConfig& config) {
  require_unit_open(config.epsilon, "epsilon");
  require_unit_open(config.delta, "delta");
  if (config.algorithm == Algorithm::Rtb) {
    throw std::invalid_argument("progressive sampling supports ob and trk");
  }
  const auto n = graph.node_count();
  if (n < 2) throw std::invalid_argument("sampling needs at least two nodes");

  const Schedule schedule(initial_sample_size(config.epsilon, config.delta), config.alpha);
  std::optional<std::uint64_t> cap = config.iteration_cap;
  if (!cap && config.algorithm == Algorithm::Trk) {
    cap = hoeffding_size(config.epsilon, config.delta, n);
  }
  if (cap && *cap == 0) throw std::invalid_argument("iteration cap must be positive");

  RademacherState state(n);
  StopReport report;
  report.epsilon = config.epsilon;
  report.cap = cap;
  std::uint64_t done = 0;
  for (std::uint32_t i = 1;; ++i) {
    std::uint64_t target = schedule.size(i);
    const bool capped = cap && target >= *cap;
    if (capped) target = *cap;
    if (target > done) {
      ordered_parallel_for(
          done, target, config.threads, 256,
          [&](std::uint64_t k) {
            SampleRng rng(config.seed, k);
            const auto pair = draw_pair(rng, n);
            std::vector<std::pair<NodeId, double>> values;
            if (config.algorithm == Algorithm::Ob) {
              for (const auto& [v, q] : pair_ratios(graph, config.optimality, pair)) {
                values.emplace_back(v, q.get_d());
              }
            } else {
              for (const auto v : trk_sample(graph, config.optimality, pair, rng)) values.emplace_back(v, 1.0);
            }
            return values;
          },
          [&](std::uint64_t, std::vector<std::pair<NodeId, double>> values) {
            for (const auto& [v, h] : values) state.update(v, h);
            return true;
          });
      done = target;
    }
    report.iterations = i;
    report.checkpoints.push_back(done);
    report.rademacher = rademacher_bound(state, done);
    report.xi = stopping_xi(report.rademacher, done, Schedule::delta_at(config.delta, i));
    if (report.xi <= config.epsilon) {
      report.stopped_by = StopReason::BoundMet;
      break;
    }
    if (capped) {
      report.stopped_by = StopReason::IterationCap;
      break;
    }
  }
  report.final_sample_size = done;

  ProgressiveResult out;
  out.report = report;
  out.scores.optimality = config.optimality;
  out.scores.sample_size = done;
  out.scores.values.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.scores.values[v] = state.sum(static_cast<NodeId>(v)) / static_cast<double>(done);
  return out;
}

namespace {

template <class Value, class Produce>
std::uint64_t accumulate_until(std::uint64_t limit, unsigned threads, const Value& threshold,
                               std::vector<Value>& total, Produce produce) {
  std::uint64_t taken = 0;
  ordered_parallel_for(0, limit, threads, 64, produce, [&](std::uint64_t, std::vector<Value> dep) {
    for (std::size_t v = 0; v < total.size(); ++v) total[v] += dep[v];
    ++taken;
    return *std::max_element(total.begin(), total.end()) < threshold;
  });
  return taken;
}

}  // namespace

ProgressiveResult prtb_estimate(const TemporalGraph& graph, const PrtbConfig& config) {
  const auto n = graph.node_count();
  if (n < 2) throw std::invalid_argument("sampling needs at least two nodes");
  if (!(config.c >= 2.0)) throw std::invalid_argument("c must be at least 2");
  if (config.max_samples == 0) throw std::invalid_argument("max_samples must be positive");

  auto source_of = [&](std::uint64_t i) {
    SampleRng rng(config.seed, i);
    return draw_source(rng, n);
  };
  const double threshold = config.c * static_cast<double>(n);
  ProgressiveResult out;
  out.scores.optimality = config.optimality;
  out.scores.values.assign(n, 0.0);
  std::uint64_t r = 0;
  bool met = false;
  if (config.arithmetic == Arithmetic::Exact) {
    std::vector<Rational> total(n);
    const Rational limit(threshold);
    r = accumulate_until(config.max_samples, config.threads, limit, total, [&](std::uint64_t i) {
      return exact_dependency(full_tbfs(graph, source_of(i), config.optimality));
    });
    met = *std::max_element(total.begin(), total.end()) >= limit;
    Rational scale(1);
    scale /= static_cast<unsigned long>(r);
    scale /= static_cast<unsigned long>(n - 1);
    for (std::size_t v = 0; v < n; ++v) {
      if (total[v] != 0) out.scores.values[v] = Rational(total[v] * scale).get_d();
    }
    out.report.max_total = Rational(*std::max_element(total.begin(), total.end())).get_d();
  } else {
    std::vector<double> total(n, 0.0);
    r = accumulate_until(config.max_samples, config.threads, threshold, total, [&](std::uint64_t i) {
      return fast_dependency(full_tbfs(graph, source_of(i), config.optimality));
    });
    met = *std::max_element(total.begin(), total.end()) >= threshold;
    const double denom = static_cast<double>(r) * static_cast<double>(n - 1);
    for (std::size_t v = 0; v < n; ++v) out.scores.values[v] = total[v] / denom;
    out.report.max_total = *std::max_element(total.begin(), total.end());
  }
  out.scores.sample_size = r;
  out.report.final_sample_size = r;
  out.report.iterations = static_cast<std::uint32_t>(std::min<std::uint64_t>(r, UINT32_MAX));
  out.report.cap = config.max_samples;
  out.report.threshold = threshold;
  out.report.checkpoints.push_back(r);
  out.report.stopped_by = met ? StopReason::BoundMet : StopReason::IterationCap;
  return out;
}

}  // namespace tbc
