#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tbc/exact_betweenness.hpp"
#include "tbc/samplers.hpp"

using namespace tbc;
using namespace tbc::testing;

TEST_SUITE("exact") {
  TEST_CASE("G1 exact scores") {
    const auto g = g1();
    const auto sh = total_dependency(g, Optimality::Shortest);
    CHECK(sh == std::vector<Rational>{0, Rational(1, 2), Rational(1, 2), 0});
    const auto scores = exact_tbc(g, Optimality::Shortest);
    CHECK(scores.values[kG1Node2] == Rational(1, 24).get_d());
    CHECK(scores.values[kG1Node3] == Rational(1, 24).get_d());
    CHECK(scores.values[kG1Node1] == 0);
    CHECK_FALSE(scores.sample_size.has_value());
    // Pairs (1,3), (1,4) and (2,4) have internal nodes.
    const auto pfm = total_dependency(g, Optimality::PrefixForemost);
    CHECK(pfm[kG1Node2] / 12 == Rational(7, 72));
    CHECK(pfm[kG1Node3] / 12 == Rational(7, 72));
    CHECK(exact_tbc(g, Optimality::PrefixForemost).values[kG1Node2] == Rational(7, 72).get_d());
  }

  TEST_CASE("no two-hop path gives zeros; tiny graphs") {
    const std::vector<RawEdge> raw{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {0, 2, 4}};
    const auto g = TemporalGraph::from_edges(3, raw);
    for (const auto opt : kAllOptimalities) {
      for (const auto x : exact_tbc(g, opt).values) CHECK(x == 0);
    }
    CHECK(exact_tbc(TemporalGraph::from_edges(1, {}), Optimality::Shortest).values == std::vector<double>{0});
    CHECK(exact_tbc(TemporalGraph{}, Optimality::Shortest).values.empty());
  }

  TEST_CASE("pairwise formulation, isolated node, thread and arithmetic agreement") {
    std::mt19937_64 gen(99);
    for (int round = 0; round < 60; ++round) {
      const auto g = random_graph(gen);
      const auto n = g.node_count();
      for (const auto opt : kAllOptimalities) {
        const auto totals = total_dependency(g, opt, 1);
        std::vector<Rational> pairwise(n);
        for (NodeId s = 0; s < n; ++s) {
          for (NodeId z = 0; z < n; ++z) {
            if (s == z) continue;
            for (const auto& [v, q] : pair_ratios(g, opt, {s, z})) pairwise[v] += q;
          }
        }
        CHECK(totals == pairwise);
        CHECK(total_dependency(g, opt, 3) == totals);

        std::vector<RawEdge> raw;
        for (const auto& e : g.edges()) raw.push_back({e.src, e.dst, e.time});
        const auto bigger = TemporalGraph::from_edges(n + 1, raw);
        auto grown = total_dependency(bigger, opt);
        CHECK(grown.back() == 0);
        grown.pop_back();
        CHECK(grown == totals);
        const auto a = exact_tbc(g, opt).values;
        const auto b = exact_tbc(bigger, opt).values;
        for (std::size_t v = 0; v < n; ++v) {
          CHECK(b[v] == doctest::Approx(a[v] * double(n * (n - 1)) / double((n + 1) * n)).epsilon(1e-14));
        }

        ExactOptions fast;
        fast.arithmetic = Arithmetic::Fast;
        fast.threads = 2;
        const auto f = exact_tbc(g, opt, fast).values;
        for (std::size_t v = 0; v < n; ++v) CHECK(f[v] == doctest::Approx(a[v]).epsilon(1e-12));
        for (std::size_t v = 0; v < n; ++v) {
          CHECK(a[v] >= 0);
          CHECK(a[v] <= 1);
        }
      }
    }
  }

  TEST_CASE("guardrail") {
    const auto g = g1();
    ExactOptions opts;
    opts.max_work = 1;
    CHECK_THROWS_AS(exact_tbc(g, Optimality::Shortest, opts), GuardrailExceeded);
    opts.max_work = 1e9;
    CHECK_NOTHROW(exact_tbc(g, Optimality::Shortest, opts));
    CHECK(estimate_exact_work(g, Optimality::PrefixForemost) == 4.0 * 5.0);
  }
}
