#include "tbc/tbfs.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace tbc {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
constexpr Time kNever = std::numeric_limits<Time>::max();

TbfsResult make_result(const TemporalGraph& graph, NodeId s, Optimality opt) {
  if (s >= graph.node_count()) throw std::out_of_range("source outside graph");
  TbfsResult r;
  r.source = s;
  r.optimality = opt;
  r.targets.resize(graph.node_count());
  r.sigma.resize(graph.node_count());
  AppearanceRecord root;
  root.appearance = {s, 0};
  root.sigma = 1;
  r.records.push_back(std::move(root));
  return r;
}

// Earliest strict arrival time at every node from s (kNever when unreachable).
std::vector<Time> earliest_arrival(const TemporalGraph& graph, NodeId s) {
  std::vector<Time> arrival(graph.node_count(), kNever);
  arrival[s] = 0;
  for (const EdgeId id : graph.edges_by_time()) {
    const auto& e = graph.edge(id);
    if (arrival[e.src] < e.time && e.time < arrival[e.dst]) arrival[e.dst] = e.time;
  }
  return arrival;
}

struct HopLimits {
  std::optional<NodeId> target;
  // Edges later than this are ignored; at exactly this time only edges into
  // the target are followed.
  Time horizon = kNever;
};

// Layered BFS over vertex appearances. Each appearance keeps its minimum hop
// count and the number of minimum-hop walks from (s, 0) reaching it.
void hop_search(const TemporalGraph& graph, TbfsResult& r, const HopLimits& limits) {
  const NodeId s = r.source;
  std::vector<std::uint32_t> record_of_slot(graph.slot_count(), kNone);
  std::vector<std::size_t> slot_of_record{0};
  std::vector<std::uint32_t> layer{0};
  std::uint32_t hop = 0;
  while (!layer.empty()) {
    ++hop;
    std::vector<std::uint32_t> next;
    bool reached_target = false;
    for (const auto from : layer) {
      const auto edges = from == 0 ? graph.out_edges(s) : graph.out_edges_after(slot_of_record[from]);
      for (const EdgeId id : edges) {
        const auto& e = graph.edge(id);
        if (e.time > limits.horizon) break;
        if (e.dst == s) continue;
        if (e.time == limits.horizon && e.dst != *limits.target) continue;
        const auto slot = graph.arrival_slot(id);
        auto rec = record_of_slot[slot];
        if (rec == kNone) {
          rec = static_cast<std::uint32_t>(r.records.size());
          record_of_slot[slot] = rec;
          slot_of_record.push_back(slot);
          AppearanceRecord fresh;
          fresh.appearance = {e.dst, e.time};
          fresh.hops = hop;
          r.records.push_back(std::move(fresh));
          next.push_back(rec);
          if (limits.target && e.dst == *limits.target) reached_target = true;
        }
        auto& node = r.records[rec];
        if (node.hops != hop) continue;
        node.sigma += r.records[from].sigma;
        node.predecessors.push_back({from, id});
      }
    }
    if (reached_target) break;
    std::sort(next.begin(), next.end(),
              [&](auto a, auto b) { return slot_of_record[a] < slot_of_record[b]; });
    layer = std::move(next);
  }
}

// Single time-ordered sweep: each node is entered only at its foremost time.
void prefix_foremost_sweep(const TemporalGraph& graph, TbfsResult& r, std::optional<NodeId> target) {
  const NodeId s = r.source;
  std::vector<Time> arrival(graph.node_count(), kNever);
  std::vector<std::uint32_t> record_of_node(graph.node_count(), kNone);
  arrival[s] = 0;
  record_of_node[s] = 0;
  for (const EdgeId id : graph.edges_by_time()) {
    const auto& e = graph.edge(id);
    if (target && e.time > arrival[*target]) break;
    if (e.dst == s || record_of_node[e.src] == kNone || arrival[e.src] >= e.time) continue;
    const auto from = record_of_node[e.src];
    auto rec = record_of_node[e.dst];
    if (rec == kNone) {
      rec = static_cast<std::uint32_t>(r.records.size());
      record_of_node[e.dst] = rec;
      arrival[e.dst] = e.time;
      AppearanceRecord fresh;
      fresh.appearance = {e.dst, e.time};
      fresh.hops = r.records[from].hops + 1;
      r.records.push_back(std::move(fresh));
    } else if (arrival[e.dst] != e.time) {
      continue;
    }
    auto& node = r.records[rec];
    node.hops = std::min(node.hops, r.records[from].hops + 1);
    node.sigma += r.records[from].sigma;
    node.predecessors.push_back({from, id});
  }
}

void collect_targets(TbfsResult& r) {
  const auto n = r.targets.size();
  for (std::uint32_t i = 1; i < r.records.size(); ++i) {
    const auto& a = r.records[i];
    const NodeId v = a.appearance.node;
    auto& list = r.targets[v];
    if (list.empty()) {
      list.push_back(i);
      continue;
    }
    const auto& cur = r.records[list.front()];
    switch (r.optimality) {
      case Optimality::Shortest:
        if (a.hops < cur.hops) list.assign(1, i);
        else if (a.hops == cur.hops) list.push_back(i);
        break;
      case Optimality::ShortestForemost:
        if (a.appearance.time < cur.appearance.time) list.assign(1, i);
        break;
      case Optimality::PrefixForemost:
        break;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(r.targets[v].begin(), r.targets[v].end());
    r.sigma[v] = 0;
    for (const auto i : r.targets[v]) r.sigma[v] += r.records[i].sigma;
  }
}

template <class Value, class Convert>
std::vector<Value> backward_pass(const TbfsResult& r, Convert convert) {
  const auto n = r.targets.size();
  std::vector<Value> seed(r.records.size(), Value(0));
  std::vector<char> seeded(r.records.size(), 0);
  for (std::size_t z = 0; z < n; ++z) {
    if (z == r.source || r.sigma[z] == 0) continue;
    for (const auto i : r.targets[z]) {
      seed[i] = convert(Rational(PathCount(1), r.sigma[z]));
      seeded[i] = 1;
    }
  }
  std::vector<Value> g(r.records.size(), Value(0));
  std::vector<Value> dep(n, Value(0));
  for (std::size_t i = r.records.size(); i-- > 1;) {
    const auto& rec = r.records[i];
    if (g[i] != 0) dep[rec.appearance.node] += convert(Rational(rec.sigma)) * g[i];
    if (seeded[i]) g[i] += seed[i];
    if (g[i] == 0) continue;
    for (const auto& p : rec.predecessors) g[p.record] += g[i];
  }
  return dep;
}

}  // namespace

std::optional<std::uint32_t> TbfsResult::find_record(VertexAppearance a) const {
  for (std::uint32_t i = 0; i < records.size(); ++i) {
    if (records[i].appearance == a) return i;
  }
  return std::nullopt;
}

TbfsResult full_tbfs(const TemporalGraph& graph, NodeId s, Optimality opt) {
  auto r = make_result(graph, s, opt);
  if (opt == Optimality::PrefixForemost) {
    prefix_foremost_sweep(graph, r, std::nullopt);
  } else {
    hop_search(graph, r, {});
  }
  collect_targets(r);
  return r;
}

TbfsResult truncated_tbfs(const TemporalGraph& graph, NodeId s, NodeId z, Optimality opt) {
  if (z >= graph.node_count()) throw std::out_of_range("target outside graph");
  if (s == z) throw std::invalid_argument("truncated search needs distinct endpoints");
  auto r = make_result(graph, s, opt);
  r.target = z;
  switch (opt) {
    case Optimality::Shortest:
      hop_search(graph, r, {z, kNever});
      break;
    case Optimality::ShortestForemost: {
      const Time foremost = earliest_arrival(graph, s)[z];
      if (foremost != kNever) hop_search(graph, r, {z, foremost});
      break;
    }
    case Optimality::PrefixForemost:
      prefix_foremost_sweep(graph, r, z);
      break;
  }
  collect_targets(r);
  return r;
}

std::vector<Rational> exact_dependency(const TbfsResult& result) {
  return backward_pass<Rational>(result, [](const Rational& q) { return q; });
}

std::vector<double> fast_dependency(const TbfsResult& result) {
  return backward_pass<double>(result, [](const Rational& q) { return q.get_d(); });
}

PairDependency pair_dependency(const TbfsResult& result, NodeId z) {
  PairDependency out;
  out.sigma = result.sigma.at(z);
  if (out.sigma == 0) return out;
  const auto& recs = result.records;
  std::uint32_t last = 0;
  for (const auto i : result.targets[z]) last = std::max(last, i);
  // count[i]: optimal s->z paths' suffixes starting at record i.
  std::vector<PathCount> count(last + 1);
  for (const auto i : result.targets[z]) count[i] = 1;
  std::map<NodeId, PathCount> through;
  for (std::size_t i = last + 1; i-- > 1;) {
    if (count[i] == 0) continue;
    const auto& rec = recs[i];
    if (rec.appearance.node != z) through[rec.appearance.node] += rec.sigma * count[i];
    for (const auto& p : rec.predecessors) count[p.record] += count[i];
  }
  out.through.assign(through.begin(), through.end());
  return out;
}

}  // namespace tbc
