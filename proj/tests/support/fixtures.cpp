#include "fixtures.hpp"

#include <sstream>

#include "tbc/path_enumeration.hpp"

namespace tbc::testing {

TemporalGraph g1() {
  std::istringstream in("1 2 1\n2 3 2\n1 3 2\n3 4 3\n2 4 3\n");
  return load_edge_list(in);
}

TemporalGraph random_graph(std::mt19937_64& gen, const RandomGraphSpec& spec) {
  std::uniform_int_distribution<std::size_t> nodes(spec.min_nodes, spec.max_nodes);
  const auto n = nodes(gen);
  std::uniform_int_distribution<std::size_t> edges(0, spec.max_edges);
  std::uniform_int_distribution<std::int64_t> node(0, static_cast<std::int64_t>(n) - 1);
  std::uniform_int_distribution<std::int64_t> time(1, spec.max_time);
  std::vector<RawEdge> raw;
  for (auto m = edges(gen); raw.size() < m;) {
    RawEdge e{node(gen), node(gen), time(gen)};
    if (e.src == e.dst && !spec.allow_self_loops) continue;
    raw.push_back(e);
  }
  return TemporalGraph::from_edges(n, raw);
}

TemporalGraph star_graph(std::size_t leaves) {
  std::vector<RawEdge> raw;
  for (std::size_t i = 1; i <= leaves; ++i) {
    raw.push_back({static_cast<std::int64_t>(i), 0, 1});
    raw.push_back({0, static_cast<std::int64_t>(i), 2});
  }
  return TemporalGraph::from_edges(leaves + 1, raw);
}

std::vector<Rational> brute_force_totals(const TemporalGraph& graph, Optimality opt) {
  const auto n = graph.node_count();
  std::vector<Rational> total(n);
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId z = 0; z < n; ++z) {
      if (s == z) continue;
      const auto paths = enumerate_paths_bruteforce(graph, s, z, opt);
      if (paths.empty()) continue;
      const Rational share(1, static_cast<unsigned long>(paths.size()));
      for (const auto& p : paths) {
        for (const auto v : internal_nodes(graph, p)) total[v] += share;
      }
    }
  }
  return total;
}

std::vector<std::vector<int>> brute_force_distances(const TemporalGraph& graph) {
  const auto n = graph.node_count();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (NodeId s = 0; s < n; ++s) {
    dist[s][s] = 0;
    for (NodeId z = 0; z < n; ++z) {
      if (s == z) continue;
      const auto paths = enumerate_paths_bruteforce(graph, s, z, Optimality::Shortest);
      if (!paths.empty()) dist[s][z] = static_cast<int>(paths.front().edges.size());
    }
  }
  return dist;
}

}  // namespace tbc::testing
