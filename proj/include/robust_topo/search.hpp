#pragma once

#include <optional>
#include <vector>

#include "robust_topo/graph_store.hpp"
#include "robust_topo/representation.hpp"

namespace rtopo {

struct ReachResult {
  bool hit_goal = false;
  // In discovery order, start first.
  std::vector<VertexId> visited;
};

// Depth-first searches over acyclic edges only. Cyclic records are never
// traversed, so reachability is that of the underlying DAG.

/// Vertices reachable from `start` through vertices whose index is at most
/// `upper_bound`. Stops as soon as `goal` is discovered.
ReachResult forward_reach(const TopologicalRepresentation& rep,
                          const GraphStore& store, VertexId start,
                          OrderIndex upper_bound,
                          std::optional<VertexId> goal = std::nullopt);

/// Vertices that reach `start` through vertices whose index is at least
/// `lower_bound`. `hit_goal` is always false.
ReachResult backward_reach(const TopologicalRepresentation& rep,
                           const GraphStore& store, VertexId start,
                           OrderIndex lower_bound);

}  // namespace rtopo
