#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "tbc/temporal_graph.hpp"
#include "tbc/types.hpp"

namespace tbc {

// A strict temporal path given by its edge ids. Empty for the empty path.
struct TemporalPath {
  std::vector<EdgeId> edges;

  friend bool operator==(const TemporalPath&, const TemporalPath&) = default;
  friend auto operator<=>(const TemporalPath&, const TemporalPath&) = default;
};

// Nodes strictly between the endpoints.
std::vector<NodeId> internal_nodes(const TemporalGraph& graph, const TemporalPath& path);
// (s, 0) followed by one appearance per edge.
std::vector<VertexAppearance> appearances(const TemporalGraph& graph, NodeId source,
                                          const TemporalPath& path);
bool is_strict_simple(const TemporalGraph& graph, NodeId source, const TemporalPath& path);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search over strict simple temporal paths, filtered by the
// optimality criterion. Meant as a reference for tiny graphs; throws
// BudgetExceeded after `budget` search steps. Result is sorted.
std::vector<TemporalPath> enumerate_paths_bruteforce(const TemporalGraph& graph, NodeId s, NodeId z,
                                                     Optimality opt,
                                                     std::size_t budget = 1'000'000);

}  // namespace tbc
