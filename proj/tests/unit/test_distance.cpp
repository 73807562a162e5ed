#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tbc/temporal_distance.hpp"

using namespace tbc;
using namespace tbc::testing;

TEST_SUITE("distance") {
  TEST_CASE("census on G1") {
    DistanceOptions opts;
    opts.samples = 4;
    opts.tau = 0.9;
    const auto d = estimate_distances(g1(), opts);
    CHECK(d.census);
    CHECK(d.diameter == 2);
    CHECK(d.connectivity_rate == 0.5);
    CHECK(d.avg_distance == doctest::Approx(7.0 / 6.0).epsilon(1e-15));
    CHECK(d.avg_distance_defined);
    CHECK(d.effective_diameter == 2);
    CHECK(d.effective_diameter_interpolated == doctest::Approx(1.4));
    CHECK(d.reach_profile == std::vector<double>{4, 9, 10});
  }

  TEST_CASE("graph without edges") {
    DistanceOptions opts;
    opts.samples = 10;
    const auto d = estimate_distances(TemporalGraph::from_edges(3, {}), opts);
    CHECK(d.diameter == 0);
    CHECK(d.connectivity_rate == 0);
    CHECK(d.avg_distance == 0);
    CHECK_FALSE(d.avg_distance_defined);
  }

  TEST_CASE("validation") {
    DistanceOptions opts;
    opts.tau = 0;
    CHECK_THROWS_AS(estimate_distances(g1(), opts), std::invalid_argument);
    opts.tau = 0.5;
    opts.samples = 0;
    CHECK_THROWS_AS(estimate_distances(g1(), opts), std::invalid_argument);
  }

  TEST_CASE("census equals brute-force distances; samples never exceed the diameter") {
    std::mt19937_64 gen(404);
    for (int round = 0; round < 150; ++round) {
      const auto g = random_graph(gen);
      const auto n = g.node_count();
      const auto dist = brute_force_distances(g);
      int D = 0;
      std::uint64_t pairs = 0, sum = 0;
      std::vector<std::uint64_t> at(n + 1, 0);
      for (NodeId s = 0; s < n; ++s) {
        for (NodeId z = 0; z < n; ++z) {
          if (s == z || dist[s][z] < 0) continue;
          D = std::max(D, dist[s][z]);
          ++pairs;
          sum += static_cast<std::uint64_t>(dist[s][z]);
          ++at[static_cast<std::size_t>(dist[s][z])];
        }
      }
      for (const double tau : {0.5, 0.9, 1.0}) {
        DistanceOptions opts;
        opts.samples = n;
        opts.tau = tau;
        const auto d = estimate_distances(g, opts);
        CHECK(d.diameter == static_cast<std::uint32_t>(D));
        CHECK(d.connectivity_rate == doctest::Approx(double(pairs) / double(n * (n - 1))));
        if (pairs == 0) {
          CHECK_FALSE(d.avg_distance_defined);
          continue;
        }
        CHECK(d.avg_distance == doctest::Approx(double(sum) / double(pairs)));
        std::uint64_t within = 0;
        std::uint32_t eff = 0;
        for (std::uint32_t h = 1; h <= static_cast<std::uint32_t>(D); ++h) {
          within += at[h];
          if (double(within) / double(pairs) >= tau) {
            eff = h;
            break;
          }
        }
        CHECK(d.effective_diameter == eff);
      }
      DistanceOptions sampled;
      sampled.samples = 2;
      sampled.seed = static_cast<std::uint64_t>(round);
      CHECK(estimate_distances(g, sampled).diameter <= static_cast<std::uint32_t>(D));
      sampled.without_replacement = true;
      CHECK(estimate_distances(g, sampled).diameter <= static_cast<std::uint32_t>(D));
    }
  }

  TEST_CASE("recommended sample size") {
    CHECK(recommended_sample_size(1899, 0.25) == 121);
    CHECK(recommended_sample_size(2, 1.0) == 1);
    CHECK(recommended_sample_size(4000, 0.25) > recommended_sample_size(1899, 0.25));
    CHECK(recommended_sample_size(1899, 0.125) >= 4 * recommended_sample_size(1899, 0.25) - 4);
  }
}
