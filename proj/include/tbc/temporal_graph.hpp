#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tbc/types.hpp"

namespace tbc {

struct TemporalEdge {
  NodeId src = 0;
  NodeId dst = 0;
  Time time = 0;

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

// An edge as read from input: arbitrary non-negative ids and raw timestamps.
struct RawEdge {
  std::int64_t src = 0;
  std::int64_t dst = 0;
  std::int64_t time = 0;
};

struct LoadOptions {
  bool undirected = false;
  bool deduplicate = false;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct GraphSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t lifetime = 0;

  friend bool operator==(const GraphSummary&, const GraphSummary&) = default;
};

// Immutable directed temporal graph with time-sorted adjacency.
//
// Besides plain out/in adjacency the graph precomputes the sparse table of
// vertex appearances: for every node the distinct times at which some edge
// enters it. Each such (node, time) pair gets a dense "slot" id, so per-source
// searches can index appearance state with flat arrays of size slot_count().
class TemporalGraph {
 public:
  TemporalGraph() = default;

  // Nodes are already numbered 0..node_count-1. Timestamps are relabeled to
  // their rank among distinct values; self-loops are dropped.
  static TemporalGraph from_edges(std::size_t node_count, std::span<const RawEdge> edges,
                                  bool directed = true);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  // Number of distinct time labels T; labels are 1..T.
  Time lifetime() const noexcept { return lifetime_; }
  bool directed() const noexcept { return directed_; }
  std::size_t dropped_self_loops() const noexcept { return dropped_self_loops_; }

  std::span<const TemporalEdge> edges() const noexcept { return edges_; }
  const TemporalEdge& edge(EdgeId e) const { return edges_[e]; }

  // Edge ids leaving u, ascending by (time, dst, input order).
  std::span<const EdgeId> out_edges(NodeId u) const;
  // Edge ids entering v, ascending by (time, src, input order).
  std::span<const EdgeId> in_edges(NodeId v) const;
  // All edge ids ascending by (time, input order).
  std::span<const EdgeId> edges_by_time() const noexcept { return by_time_; }

  std::size_t slot_count() const noexcept { return slot_node_.size(); }
  NodeId slot_node(std::size_t slot) const { return slot_node_[slot]; }
  Time slot_time(std::size_t slot) const { return slot_time_[slot]; }
  // Slots of node v, ascending by time.
  std::size_t slot_begin(NodeId v) const { return slot_offsets_[v]; }
  std::size_t slot_end(NodeId v) const { return slot_offsets_[v + 1]; }
  // Slot of the appearance (dst, time) an edge arrives at.
  std::size_t arrival_slot(EdgeId e) const { return arrival_slot_[e]; }
  // Out-edges of slot_node(slot) with time strictly greater than slot_time(slot).
  std::span<const EdgeId> out_edges_after(std::size_t slot) const;

  std::int64_t original_id(NodeId v) const { return original_ids_[v]; }
  std::int64_t original_time(Time t) const { return original_times_[t - 1]; }
  std::span<const std::int64_t> original_ids() const noexcept { return original_ids_; }

 private:
  friend TemporalGraph build_graph(std::span<const RawEdge>, const LoadOptions&);

  // Takes edges with compact node ids and raw times; drops self-loops,
  // relabels times and builds every index.
  static TemporalGraph assemble(std::size_t node_count, std::vector<RawEdge> edges,
                                std::vector<std::int64_t> original_ids, const LoadOptions& options);
  void build_indices();

  std::size_t node_count_ = 0;
  Time lifetime_ = 0;
  bool directed_ = true;
  std::size_t dropped_self_loops_ = 0;
  std::vector<TemporalEdge> edges_;
  std::vector<std::int64_t> original_ids_;
  std::vector<std::int64_t> original_times_;

  std::vector<std::size_t> out_offsets_;
  std::vector<EdgeId> out_;
  std::vector<std::size_t> in_offsets_;
  std::vector<EdgeId> in_;
  std::vector<EdgeId> by_time_;

  std::vector<std::size_t> slot_offsets_;
  std::vector<NodeId> slot_node_;
  std::vector<Time> slot_time_;
  std::vector<std::size_t> slot_out_begin_;
  std::vector<std::size_t> arrival_slot_;
};

// Compacts node ids in first-appearance order and ranks timestamps.
TemporalGraph build_graph(std::span<const RawEdge> raw, const LoadOptions& options = {});

// Whitespace-separated "u v t" triples; '#' and '%' lines are comments.
TemporalGraph load_edge_list(std::istream& in, const LoadOptions& options = {});
TemporalGraph load_edge_list_file(const std::filesystem::path& path,
                                  const LoadOptions& options = {});

// Emits relabeled ids and times in stored order. Undirected graphs are written
// with one orientation per edge so that reloading as undirected is identity.
void write_edge_list(std::ostream& out, const TemporalGraph& graph);

GraphSummary summarize(const TemporalGraph& graph);

}  // namespace tbc
