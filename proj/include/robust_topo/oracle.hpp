#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "robust_topo/types.hpp"

namespace rtopo {

class DynamicGraph;
class GraphStore;
class TopologicalRepresentation;

// From-scratch reference implementation for differential testing. Nothing
// here touches the incremental code path.

struct BatchResult {
  std::optional<std::vector<VertexId>> ordering;  // present iff acyclic
  bool cyclic = false;
  // (u, v) for every u != v with a path u ->+ v. Empty unless requested.
  std::set<std::pair<VertexId, VertexId>> closure;
};

/// Kahn's elimination with smallest-id-first tie-break. Throws
/// GraphError(DanglingEdge) if an edge names a vertex not in `vertices`.
BatchResult batch_toposort(std::span<const VertexId> vertices,
                           std::span<const Edge> edges,
                           bool with_closure = true);

/// True iff `order` is a permutation of `vertices` in which every edge's
/// source precedes its target.
bool is_valid_topological_order(std::span<const VertexId> order,
                                std::span<const VertexId> vertices,
                                std::span<const Edge> edges);

struct Discrepancy {
  std::string check;  // "cycle-agreement", "order-validity", "reachability"
  std::string detail;
};

std::vector<Discrepancy> differential_check(
    const TopologicalRepresentation& rep, const GraphStore& store);
std::vector<Discrepancy> differential_check(const DynamicGraph& g);

}  // namespace rtopo
