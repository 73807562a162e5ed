#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "tbc/progressive.hpp"
#include "tbc/sample_bounds.hpp"
#include "tbc/tbfs.hpp"

using namespace tbc;
using namespace tbc::testing;

TEST_SUITE("progressive") {
  TEST_CASE("schedule") {
    const Schedule s(350, 1.5);
    CHECK(s.size(1) == 350);
    CHECK(s.size(2) == 525);
    CHECK(s.size(3) == 788);
    const Schedule slow(10, 1.01);
    for (std::uint32_t i = 2; i < 30; ++i) CHECK(slow.size(i) > slow.size(i - 1));
    double spent = 0;
    for (std::uint32_t i = 1; i < 60; ++i) spent += Schedule::delta_at(0.1, i);
    CHECK(spent <= 0.1);
    CHECK_THROWS_AS(Schedule(10, 1.0), std::invalid_argument);
  }

  TEST_CASE("progressive ob on G1 stays within epsilon") {
    const auto g = g1();
    const auto exact = exact_tbc(g, Optimality::Shortest).values;
    int violations = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      ProgressiveConfig cfg;
      cfg.epsilon = 0.3;
      cfg.delta = 0.1;
      cfg.alpha = 1.5;
      cfg.seed = seed;
      const auto out = progressive_estimate(g, cfg);
      CHECK(out.report.stopped_by == StopReason::BoundMet);
      CHECK(out.report.xi <= 0.3);
      CHECK(out.report.final_sample_size >= initial_sample_size(0.3, 0.1));
      double sup = 0;
      for (std::size_t v = 0; v < 4; ++v) {
        CHECK(out.scores.values[v] >= 0);
        CHECK(out.scores.values[v] <= 1);
        sup = std::max(sup, std::abs(out.scores.values[v] - exact[v]));
      }
      violations += sup > 0.3;
    }
    CHECK(violations == 0);
  }

  TEST_CASE("graph without connected pairs stops at the first check") {
    const auto g = TemporalGraph::from_edges(5, {});
    ProgressiveConfig cfg;
    cfg.epsilon = 0.1;
    const auto out = progressive_estimate(g, cfg);
    CHECK(out.report.iterations == 1);
    CHECK(out.report.final_sample_size == 350);
    CHECK(out.report.xi == stopping_xi(0, 350, 0.05));
    for (const auto x : out.scores.values) CHECK(x == 0);
  }

  TEST_CASE("trk is capped at the Hoeffding size") {
    std::mt19937_64 gen(5);
    RandomGraphSpec spec;
    spec.min_nodes = 9;
    spec.max_edges = 25;
    const auto g = random_graph(gen, spec);
    ProgressiveConfig cfg;
    cfg.algorithm = Algorithm::Trk;
    cfg.epsilon = 0.05;
    cfg.delta = 0.1;
    const auto out = progressive_estimate(g, cfg);
    const auto omega = hoeffding_size(0.05, 0.1, g.node_count());
    REQUIRE(out.report.cap.has_value());
    CHECK(*out.report.cap == omega);
    CHECK(out.report.final_sample_size <= omega);
    if (out.report.stopped_by == StopReason::IterationCap) CHECK(out.report.final_sample_size == omega);
  }

  TEST_CASE("running sums equal the fixed-size estimators on the same samples") {
    std::mt19937_64 gen(12);
    RandomGraphSpec spec;
    spec.min_nodes = 7;
    const auto g = random_graph(gen, spec);
    for (const auto algo : {Algorithm::Ob, Algorithm::Trk}) {
      ProgressiveConfig cfg;
      cfg.algorithm = algo;
      cfg.epsilon = 0.2;
      cfg.seed = 17;
      cfg.iteration_cap = 1000000;
      const auto out = progressive_estimate(g, cfg);
      SamplerConfig fixed;
      fixed.seed = 17;
      fixed.sample_size = out.report.final_sample_size;
      fixed.arithmetic = Arithmetic::Fast;
      const auto same = run_sampler(algo, g, fixed);
      CHECK(same.values == out.scores.values);
      cfg.threads = 4;
      CHECK(progressive_estimate(g, cfg).scores.values == out.scores.values);
    }
  }

  TEST_CASE("p-rtb is rtb with a stopping rule") {
    const auto g = g1();
    PrtbConfig cfg;
    cfg.c = 2;
    cfg.seed = 9;
    cfg.max_samples = 1000;
    const auto out = prtb_estimate(g, cfg);
    // Per-source dependencies on G1 never exceed 7/6, and the cap governs.
    CHECK(out.report.final_sample_size <= 1000);
    SamplerConfig fixed;
    fixed.seed = 9;
    fixed.sample_size = out.report.final_sample_size;
    CHECK(rtb_estimate(g, fixed).values == out.scores.values);

    std::mt19937_64 gen(3);
    RandomGraphSpec spec;
    spec.min_nodes = 9;
    spec.max_time = 12;
    for (int round = 0; round < 20; ++round) {
      const auto h = random_graph(gen, spec);
      const auto n = h.node_count();
      for (const auto arith : {Arithmetic::Exact, Arithmetic::Fast}) {
        PrtbConfig p;
        p.c = 2;
        p.seed = static_cast<std::uint64_t>(round);
        p.max_samples = 400;
        p.arithmetic = arith;
        const auto got = prtb_estimate(h, p);
        const auto r = got.report.final_sample_size;
        SamplerConfig f;
        f.seed = p.seed;
        f.sample_size = r;
        f.arithmetic = arith;
        CHECK(rtb_estimate(h, f).values == got.scores.values);
        // Replay the source sequence: the threshold is first crossed at sample r.
        std::vector<Rational> total(n);
        std::uint64_t first_cross = 0;
        for (std::uint64_t i = 0; i < r; ++i) {
          SampleRng rng(p.seed, i);
          const auto dep = exact_dependency(full_tbfs(h, draw_source(rng, n), p.optimality));
          for (std::size_t v = 0; v < n; ++v) total[v] += dep[v];
          if (!first_cross && *std::max_element(total.begin(), total.end()) >= Rational(2 * n)) first_cross = i + 1;
        }
        if (got.report.stopped_by == StopReason::BoundMet) {
          CHECK(first_cross == r);
        } else {
          CHECK(first_cross == 0);
          CHECK(r == 400);
        }
      }
    }
    PrtbConfig bad;
    bad.c = 1.5;
    CHECK_THROWS_AS(prtb_estimate(g, bad), std::invalid_argument);
  }
}
