#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tbc/temporal_graph.hpp"
#include "tbc/types.hpp"

namespace tbc {

// One incoming DAG edge: the record it extends from and the graph edge used.
// Parallel edges give distinct entries.
struct Predecessor {
  std::uint32_t record = 0;
  EdgeId edge = 0;
};

struct AppearanceRecord {
  VertexAppearance appearance;
  std::uint32_t hops = 0;
  // Admissible s-paths whose last edge arrives at this appearance.
  PathCount sigma;
  std::vector<Predecessor> predecessors;
};

// Predecessor DAG of one temporal BFS. records[0] is the sentinel (s, 0) and
// records are stored in a topological order (every predecessor index is
// smaller than the record's own index).
struct TbfsResult {
  NodeId source = 0;
  Optimality optimality = Optimality::Shortest;
  // Set for truncated searches; only that node's target data is meaningful.
  std::optional<NodeId> target;
  std::vector<AppearanceRecord> records;
  // Per node: record indices of target appearances and their summed sigma.
  std::vector<std::vector<std::uint32_t>> targets;
  std::vector<PathCount> sigma;

  bool reachable(NodeId z) const { return sigma[z] != 0; }
  std::optional<std::uint32_t> find_record(VertexAppearance a) const;
};

TbfsResult full_tbfs(const TemporalGraph& graph, NodeId s, Optimality opt);

// Search from s that stops once every optimal s->z path is known. Target data
// for z equals what full_tbfs(s) reports for z. Requires s != z.
TbfsResult truncated_tbfs(const TemporalGraph& graph, NodeId s, NodeId z, Optimality opt);

// dependency[v] = sum over z of sigma_sz(v) / sigma_sz.
std::vector<Rational> exact_dependency(const TbfsResult& result);
std::vector<double> fast_dependency(const TbfsResult& result);

// sigma_sz(v) for every node v internal to some optimal s->z path.
struct PairDependency {
  PathCount sigma;
  std::vector<std::pair<NodeId, PathCount>> through;

  Rational ratio(std::size_t i) const {
    Rational q(through[i].second, sigma);
    q.canonicalize();
    return q;
  }
};

PairDependency pair_dependency(const TbfsResult& result, NodeId z);

}  // namespace tbc
