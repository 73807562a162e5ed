#include "tbc/temporal_graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <tuple>
#include <unordered_map>

namespace tbc {

std::string_view to_string(Optimality opt) {
  switch (opt) {
    case Optimality::Shortest:
      return "sh";
    case Optimality::ShortestForemost:
      return "sfm";
    case Optimality::PrefixForemost:
      return "pfm";
  }
  return "?";
}

std::optional<Optimality> parse_optimality(std::string_view text) {
  if (text == "sh") return Optimality::Shortest;
  if (text == "sfm") return Optimality::ShortestForemost;
  if (text == "pfm") return Optimality::PrefixForemost;
  return std::nullopt;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

TemporalGraph TemporalGraph::from_edges(std::size_t node_count, std::span<const RawEdge> edges,
                                        bool directed) {
  for (const auto& e : edges) {
    if (e.src < 0 || e.dst < 0 || static_cast<std::size_t>(e.src) >= node_count ||
        static_cast<std::size_t>(e.dst) >= node_count) {
      throw std::invalid_argument("edge endpoint outside [0, node_count)");
    }
  }
  std::vector<std::int64_t> ids(node_count);
  std::iota(ids.begin(), ids.end(), std::int64_t{0});
  LoadOptions options;
  options.undirected = !directed;
  return assemble(node_count, {edges.begin(), edges.end()}, std::move(ids), options);
}

TemporalGraph TemporalGraph::assemble(std::size_t node_count, std::vector<RawEdge> edges,
                                      std::vector<std::int64_t> original_ids,
                                      const LoadOptions& options) {
  TemporalGraph g;
  g.node_count_ = node_count;
  g.directed_ = !options.undirected;
  g.original_ids_ = std::move(original_ids);

  std::vector<RawEdge> kept;
  kept.reserve(edges.size());
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> seen;
  for (const auto& e : edges) {
    if (e.src == e.dst) {
      ++g.dropped_self_loops_;
      continue;
    }
    if (options.deduplicate && !seen.emplace(e.src, e.dst, e.time).second) continue;
    kept.push_back(e);
  }

  std::vector<std::int64_t> times;
  times.reserve(kept.size());
  for (const auto& e : kept) times.push_back(e.time);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  g.lifetime_ = static_cast<Time>(times.size());

  auto rank = [&](std::int64_t t) {
    return static_cast<Time>(std::lower_bound(times.begin(), times.end(), t) - times.begin() + 1);
  };
  g.edges_.reserve(options.undirected ? 2 * kept.size() : kept.size());
  for (const auto& e : kept) {
    const auto u = static_cast<NodeId>(e.src);
    const auto v = static_cast<NodeId>(e.dst);
    const Time t = rank(e.time);
    g.edges_.push_back({u, v, t});
    if (options.undirected) g.edges_.push_back({v, u, t});
  }
  g.original_times_ = std::move(times);
  g.build_indices();
  return g;
}

void TemporalGraph::build_indices() {
  const std::size_t n = node_count_;
  const std::size_t m = edges_.size();

  auto group = [&](auto key_of, auto less, std::vector<std::size_t>& offsets,
                   std::vector<EdgeId>& ids) {
    offsets.assign(n + 1, 0);
    for (const auto& e : edges_) ++offsets[key_of(e) + 1];
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    ids.resize(m);
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (EdgeId id = 0; id < m; ++id) ids[cursor[key_of(edges_[id])]++] = id;
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(ids.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
                ids.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]), less);
    }
  };

  group([](const TemporalEdge& e) { return e.src; },
        [&](EdgeId a, EdgeId b) {
          const auto& x = edges_[a];
          const auto& y = edges_[b];
          return std::tie(x.time, x.dst, a) < std::tie(y.time, y.dst, b);
        },
        out_offsets_, out_);
  group([](const TemporalEdge& e) { return e.dst; },
        [&](EdgeId a, EdgeId b) {
          const auto& x = edges_[a];
          const auto& y = edges_[b];
          return std::tie(x.time, x.src, a) < std::tie(y.time, y.src, b);
        },
        in_offsets_, in_);

  by_time_.resize(m);
  std::iota(by_time_.begin(), by_time_.end(), EdgeId{0});
  std::stable_sort(by_time_.begin(), by_time_.end(),
                   [&](EdgeId a, EdgeId b) { return edges_[a].time < edges_[b].time; });

  slot_offsets_.assign(n + 1, 0);
  slot_node_.clear();
  slot_time_.clear();
  for (NodeId v = 0; v < n; ++v) {
    slot_offsets_[v] = slot_node_.size();
    Time last = 0;
    for (auto i = in_offsets_[v]; i < in_offsets_[v + 1]; ++i) {
      const Time t = edges_[in_[i]].time;
      if (t != last) {
        slot_node_.push_back(v);
        slot_time_.push_back(t);
        last = t;
      }
    }
  }
  slot_offsets_[n] = slot_node_.size();

  arrival_slot_.resize(m);
  for (EdgeId id = 0; id < m; ++id) {
    const auto& e = edges_[id];
    const auto first = slot_time_.begin() + static_cast<std::ptrdiff_t>(slot_offsets_[e.dst]);
    const auto last = slot_time_.begin() + static_cast<std::ptrdiff_t>(slot_offsets_[e.dst + 1]);
    arrival_slot_[id] = static_cast<std::size_t>(std::lower_bound(first, last, e.time) -
                                                 slot_time_.begin());
  }

  slot_out_begin_.resize(slot_node_.size());
  for (std::size_t s = 0; s < slot_node_.size(); ++s) {
    const NodeId u = slot_node_[s];
    const auto first = out_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[u]);
    const auto last = out_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[u + 1]);
    const Time t = slot_time_[s];
    slot_out_begin_[s] = static_cast<std::size_t>(
        std::upper_bound(first, last, t,
                         [&](Time value, EdgeId id) { return value < edges_[id].time; }) -
        out_.begin());
  }
}

std::span<const EdgeId> TemporalGraph::out_edges(NodeId u) const {
  return {out_.data() + out_offsets_[u], out_offsets_[u + 1] - out_offsets_[u]};
}

std::span<const EdgeId> TemporalGraph::in_edges(NodeId v) const {
  return {in_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

std::span<const EdgeId> TemporalGraph::out_edges_after(std::size_t slot) const {
  const auto begin = slot_out_begin_[slot];
  const auto end = out_offsets_[slot_node_[slot] + 1];
  return {out_.data() + begin, end - begin};
}

TemporalGraph build_graph(std::span<const RawEdge> raw, const LoadOptions& options) {
  std::unordered_map<std::int64_t, NodeId> compact;
  std::vector<std::int64_t> original;
  auto id_of = [&](std::int64_t x) {
    auto [it, inserted] = compact.try_emplace(x, static_cast<NodeId>(original.size()));
    if (inserted) original.push_back(x);
    return static_cast<std::int64_t>(it->second);
  };

  std::vector<RawEdge> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    if (e.src < 0 || e.dst < 0) throw std::invalid_argument("negative node id");
    // Nodes that only occur in self-loops never become part of the graph.
    if (e.src == e.dst) {
      edges.push_back({-1, -1, e.time});
      continue;
    }
    const auto u = id_of(e.src);
    const auto v = id_of(e.dst);
    edges.push_back({u, v, e.time});
  }
  const std::size_t n = original.size();
  return TemporalGraph::assemble(n, std::move(edges), std::move(original), options);
}

namespace {

bool parse_int(std::string_view token, std::int64_t& out) {
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

TemporalGraph load_edge_list(std::istream& in, const LoadOptions& options) {
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest(line);
    std::vector<std::string_view> tokens;
    while (!rest.empty()) {
      const auto start = rest.find_first_not_of(" \t\r\v\f");
      if (start == std::string_view::npos) break;
      rest.remove_prefix(start);
      const auto end = rest.find_first_of(" \t\r\v\f");
      tokens.push_back(rest.substr(0, end));
      rest.remove_prefix(end == std::string_view::npos ? rest.size() : end);
    }
    if (tokens.empty() || tokens.front().starts_with('#') || tokens.front().starts_with('%')) {
      continue;
    }
    if (tokens.size() != 3) {
      throw ParseError(line_no, "expected 3 fields, found " + std::to_string(tokens.size()));
    }
    RawEdge e;
    if (!parse_int(tokens[0], e.src) || !parse_int(tokens[1], e.dst) ||
        !parse_int(tokens[2], e.time)) {
      throw ParseError(line_no, "non-integer field");
    }
    if (e.src < 0 || e.dst < 0) throw ParseError(line_no, "negative node id");
    raw.push_back(e);
  }
  return build_graph(raw, options);
}

TemporalGraph load_edge_list_file(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  return load_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const TemporalGraph& graph) {
  const auto edges = graph.edges();
  const std::size_t step = graph.directed() ? 1 : 2;
  for (std::size_t i = 0; i < edges.size(); i += step) {
    out << edges[i].src << ' ' << edges[i].dst << ' ' << edges[i].time << '\n';
  }
}

GraphSummary summarize(const TemporalGraph& graph) {
  return {graph.node_count(), graph.edge_count(), graph.lifetime()};
}

}  // namespace tbc
