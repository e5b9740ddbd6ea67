#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "robust_topo/types.hpp"

namespace rtopo {

/// Edge bookkeeping split by classification. Acyclic edges are kept as
/// mirrored out/in adjacency over the underlying DAG; cyclic edges live in
/// a separate list in insertion order. All iteration is insertion-ordered.
class GraphStore {
 public:
  GraphStore() = default;

  void add_vertex(VertexId v);
  // Vertex must have no incident edges left.
  void remove_vertex(VertexId v);
  bool contains(VertexId v) const { return out_.contains(v); }

  void insert_edge_record(const Edge& e, EdgeClass c);
  EdgeClass delete_edge_record(const Edge& e);
  std::optional<EdgeClass> edge_class(const Edge& e) const;

  std::span<const VertexId> out_neighbors_acyclic(VertexId u) const;
  std::span<const VertexId> in_neighbors_acyclic(VertexId v) const;
  std::span<const Edge> cyclic_edges() const noexcept { return cyclic_; }

  std::size_t edge_count() const noexcept { return classes_.size(); }
  std::size_t cyclic_count() const noexcept { return cyclic_.size(); }

  /// Every stored edge with its class, acyclic edges grouped by source in
  /// vertex-insertion order followed by the cyclic list.
  std::vector<std::pair<Edge, EdgeClass>> all_edges() const;

  std::span<const VertexId> vertices() const noexcept { return vertices_; }

 private:
  const std::vector<VertexId>& adjacency(
      const std::unordered_map<VertexId, std::vector<VertexId>>& side,
      VertexId v) const;

  std::vector<VertexId> vertices_;
  std::unordered_map<VertexId, std::vector<VertexId>> out_;
  std::unordered_map<VertexId, std::vector<VertexId>> in_;
  std::vector<Edge> cyclic_;
  std::unordered_map<Edge, EdgeClass> classes_;
};

}  // namespace rtopo
