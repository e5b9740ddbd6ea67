#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "robust_topo/graph_store.hpp"
#include "robust_topo/representation.hpp"
#include "robust_topo/types.hpp"

namespace rtopo {

/// Cyclic edges converted back to acyclic by one removal, in promotion
/// order.
struct PromotionReport {
  std::vector<Edge> promoted;

  bool empty() const noexcept { return promoted.empty(); }
  std::size_t size() const noexcept { return promoted.size(); }
};

/// Raised by topological_ordering() while cyclic edges exist.
class CyclicError : public std::runtime_error {
 public:
  explicit CyclicError(std::size_t count)
      : std::runtime_error("graph has " + std::to_string(count) +
                           " cyclic edge(s)"),
        count_(count) {}

  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

/// One reorder: the source set (vertices reaching the new edge's source)
/// and the target set (vertices reachable from its target), each ascending
/// by the index it held before the reorder.
struct ReorderEvent {
  Edge edge;
  std::vector<VertexId> source_set;
  std::vector<VertexId> target_set;
  std::vector<OrderIndex> source_before, source_after;
  std::vector<OrderIndex> target_before, target_after;
};

struct InvariantViolation {
  std::string invariant;  // "I1", "I2", "I3", "bijection", ...
  std::string witness;
};

/// Checks every structural invariant of a representation/store pair.
/// Empty result means the pair is consistent.
std::vector<InvariantViolation> check_invariants(
    const TopologicalRepresentation& rep, const GraphStore& store);

struct GraphStats {
  std::uint64_t reorders = 0;
  std::uint64_t promotions = 0;
};

/// A directed graph kept as a topological representation under edge and
/// vertex insertions and removals. Edges that would close a cycle are
/// stored as cyclic (right-to-left) instead of being rejected, and are
/// promoted back to acyclic once removals break the cycle. Whenever no
/// cyclic edge remains, the stored order is a topological ordering.
///
/// Single writer; concurrent const access is safe only with no writer.
class DynamicGraph {
 public:
  using ReorderObserver = std::function<void(const ReorderEvent&)>;

  DynamicGraph() = default;

  VertexId add_vertex();

  /// Inserts u -> v and returns its classification. Re-adding an existing
  /// edge is a no-op that returns the stored class.
  EdgeClass add_edge(VertexId u, VertexId v);

  PromotionReport remove_edge(VertexId u, VertexId v);

  /// Removes v with all incident edges, then rescans once.
  PromotionReport remove_vertex(VertexId v);

  /// The stored order. Throws CyclicError while any cyclic edge exists.
  std::vector<VertexId> topological_ordering() const;

  /// Unbounded reachability over acyclic edges.
  bool is_reachable_acyclic(VertexId u, VertexId v) const;

  bool has_cycles() const noexcept { return store_.cyclic_count() > 0; }
  std::size_t cyclic_edge_count() const noexcept {
    return store_.cyclic_count();
  }

  /// One pass over the cyclic edges in insertion order, promoting every
  /// edge whose source is no longer reachable from its target. Runs
  /// automatically after removals; exposed for fixpoint checks.
  PromotionReport rescan_cyclic_edges();

  std::vector<InvariantViolation> check_invariants() const {
    return rtopo::check_invariants(rep_, store_);
  }

  bool contains(VertexId v) const { return rep_.contains(v); }
  std::optional<EdgeClass> edge_class(VertexId u, VertexId v) const {
    return store_.edge_class(Edge{u, v});
  }
  std::size_t vertex_count() const noexcept { return rep_.size(); }
  std::size_t edge_count() const noexcept { return store_.edge_count(); }

  const TopologicalRepresentation& representation() const noexcept {
    return rep_;
  }
  const GraphStore& store() const noexcept { return store_; }
  const GraphStats& stats() const noexcept { return stats_; }

  void set_reorder_observer(ReorderObserver observer) {
    observer_ = std::move(observer);
  }

 private:
  void require_vertex(VertexId v) const;
  // Makes room for e as an acyclic edge, reordering if needed. Returns
  // false when e's source is reachable from its target.
  bool make_room_for(const Edge& e);

  TopologicalRepresentation rep_;
  GraphStore store_;
  std::uint64_t next_id_ = 0;
  GraphStats stats_;
  ReorderObserver observer_;
};

}  // namespace rtopo
