#include "tbc/path_enumeration.hpp"

#include <algorithm>
#include <limits>

namespace tbc {

std::vector<NodeId> internal_nodes(const TemporalGraph& graph, const TemporalPath& path) {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i + 1 < path.edges.size(); ++i) out.push_back(graph.edge(path.edges[i]).dst);
  return out;
}

std::vector<VertexAppearance> appearances(const TemporalGraph& graph, NodeId source,
                                          const TemporalPath& path) {
  std::vector<VertexAppearance> out{{source, 0}};
  for (const auto id : path.edges) out.push_back({graph.edge(id).dst, graph.edge(id).time});
  return out;
}

bool is_strict_simple(const TemporalGraph& graph, NodeId source, const TemporalPath& path) {
  std::vector<NodeId> seen{source};
  NodeId at = source;
  Time last = 0;
  for (const auto id : path.edges) {
    const auto& e = graph.edge(id);
    if (e.src != at || e.time <= last) return false;
    if (std::find(seen.begin(), seen.end(), e.dst) != seen.end()) return false;
    seen.push_back(e.dst);
    at = e.dst;
    last = e.time;
  }
  return true;
}

namespace {

class Search {
 public:
  Search(const TemporalGraph& graph, std::size_t budget)
      : graph_(graph), budget_(budget), on_path_(graph.node_count(), 0) {}

  // Calls visit(path) for every strict simple path from s, including the
  // empty one. A false return prunes extensions of that path.
  template <class Visit>
  void run(NodeId s, Visit&& visit) {
    on_path_[s] = 1;
    extend(s, 0, visit);
    on_path_[s] = 0;
  }

 private:
  template <class Visit>
  void extend(NodeId at, Time last, Visit& visit) {
    if (steps_++ >= budget_) throw BudgetExceeded("path enumeration budget exceeded");
    if (!visit(path_)) return;
    for (const auto id : graph_.out_edges(at)) {
      const auto& e = graph_.edge(id);
      if (e.time <= last || on_path_[e.dst]) continue;
      on_path_[e.dst] = 1;
      path_.edges.push_back(id);
      extend(e.dst, e.time, visit);
      path_.edges.pop_back();
      on_path_[e.dst] = 0;
    }
  }

  const TemporalGraph& graph_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  std::vector<char> on_path_;
  TemporalPath path_;
};

}  // namespace

std::vector<TemporalPath> enumerate_paths_bruteforce(const TemporalGraph& graph, NodeId s, NodeId z,
                                                     Optimality opt, std::size_t budget) {
  const auto n = graph.node_count();
  if (s >= n || z >= n) throw std::out_of_range("node outside graph");
  if (s == z) return {};

  // Foremost arrival at every node over all strict simple paths from s.
  constexpr Time kNever = std::numeric_limits<Time>::max();
  std::vector<Time> foremost(n, kNever);
  foremost[s] = 0;
  std::vector<TemporalPath> to_z;
  Search(graph, budget).run(s, [&](const TemporalPath& p) {
    if (p.edges.empty()) return true;
    const auto& e = graph.edge(p.edges.back());
    foremost[e.dst] = std::min(foremost[e.dst], e.time);
    if (e.dst == z) to_z.push_back(p);
    return true;
  });
  if (to_z.empty()) return {};

  auto arrival = [&](const TemporalPath& p) { return graph.edge(p.edges.back()).time; };
  std::vector<TemporalPath> out;
  switch (opt) {
    case Optimality::Shortest: {
      std::size_t best = std::numeric_limits<std::size_t>::max();
      for (const auto& p : to_z) best = std::min(best, p.edges.size());
      for (const auto& p : to_z) {
        if (p.edges.size() == best) out.push_back(p);
      }
      break;
    }
    case Optimality::ShortestForemost: {
      std::size_t best = std::numeric_limits<std::size_t>::max();
      for (const auto& p : to_z) {
        if (arrival(p) == foremost[z]) best = std::min(best, p.edges.size());
      }
      for (const auto& p : to_z) {
        if (arrival(p) == foremost[z] && p.edges.size() == best) out.push_back(p);
      }
      break;
    }
    case Optimality::PrefixForemost:
      for (const auto& p : to_z) {
        const bool ok = std::all_of(p.edges.begin(), p.edges.end(), [&](EdgeId id) {
          return graph.edge(id).time == foremost[graph.edge(id).dst];
        });
        if (ok) out.push_back(p);
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tbc
