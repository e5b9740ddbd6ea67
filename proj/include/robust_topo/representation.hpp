#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "robust_topo/types.hpp"

namespace rtopo {

/// The stored ordering of a graph: a bijection between live vertices and
/// the contiguous indices {0, ..., n-1}. For an acyclic graph this is a
/// topological ordering and is returned as-is.
class TopologicalRepresentation {
 public:
  TopologicalRepresentation() = default;

  std::size_t size() const noexcept { return vertex_at_.size(); }
  bool empty() const noexcept { return vertex_at_.empty(); }
  bool contains(VertexId v) const { return index_of_.contains(v); }

  /// Places `v` in the rightmost slot and returns that slot.
  OrderIndex append_vertex(VertexId v);

  /// Removes `v` and shifts every vertex to its right down by one.
  /// Returns the vacated index.
  OrderIndex remove_vertex_slot(VertexId v);

  OrderIndex index_of(VertexId v) const;
  VertexId vertex_at(OrderIndex i) const;

  /// Vertices in index order.
  std::span<const VertexId> order() const noexcept { return vertex_at_; }

  /// Redistributes the indices currently held by `first` and `second`.
  /// Both sequences must be disjoint and ascending by current index. The
  /// smallest |first| indices of the combined pool go to `first` in the
  /// given order, the rest go to `second`. Vertices outside the pool keep
  /// their indices.
  void reassign_pool(std::span<const VertexId> first,
                     std::span<const VertexId> second);

  // Test hook for planting defects; bypasses all validation.
  void force_swap_for_testing(OrderIndex i, OrderIndex j);

 private:
  std::vector<VertexId> vertex_at_;
  std::unordered_map<VertexId, OrderIndex> index_of_;
};

}  // namespace rtopo
