#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tbc/temporal_graph.hpp"
#include "tbc/types.hpp"

namespace tbc::testing {

// Directed toy graph with edges (1,2,1) (2,3,2) (1,3,2) (3,4,3) (2,4,3);
// input ids 1..4 become 0..3.
TemporalGraph g1();
inline constexpr NodeId kG1Node1 = 0, kG1Node2 = 1, kG1Node3 = 2, kG1Node4 = 3;

struct RandomGraphSpec {
  std::size_t min_nodes = 2;
  std::size_t max_nodes = 9;
  std::size_t max_edges = 25;
  std::int64_t max_time = 6;
  bool allow_self_loops = true;
};

// Node ids 0..n-1 including isolated ones.
TemporalGraph random_graph(std::mt19937_64& gen, const RandomGraphSpec& spec = {});

// Leaves 1..leaves reach the center 0 at time 1; the center reaches every
// leaf at time 2.
TemporalGraph star_graph(std::size_t leaves);

// Sum over ordered pairs s != z of sigma_sz(v)/sigma_sz, by path enumeration.
std::vector<Rational> brute_force_totals(const TemporalGraph& graph, Optimality opt);

// Shortest strict temporal hop distance for every ordered pair; -1 if none.
std::vector<std::vector<int>> brute_force_distances(const TemporalGraph& graph);

inline constexpr Optimality kAllOptimalities[] = {Optimality::Shortest, Optimality::ShortestForemost,
                                                  Optimality::PrefixForemost};

}  // namespace tbc::testing
