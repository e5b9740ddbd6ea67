#include "robust_topo/dynamic_graph.hpp"

#include <algorithm>
#include <sstream>

#include "robust_topo/errors.hpp"
#include "robust_topo/search.hpp"

namespace rtopo {

namespace {

std::string describe(VertexId v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void sort_by_index(const TopologicalRepresentation& rep,
                   std::vector<VertexId>& vertices) {
  std::sort(vertices.begin(), vertices.end(), [&](VertexId a, VertexId b) {
    return rep.index_of(a) < rep.index_of(b);
  });
}

std::vector<OrderIndex> indices(const TopologicalRepresentation& rep,
                                const std::vector<VertexId>& vertices) {
  std::vector<OrderIndex> out;
  out.reserve(vertices.size());
  for (VertexId v : vertices) out.push_back(rep.index_of(v));
  return out;
}

}  // namespace

void DynamicGraph::require_vertex(VertexId v) const {
  if (!rep_.contains(v)) {
    throw GraphError(ErrorCode::UnknownVertex, describe(v));
  }
}

VertexId DynamicGraph::add_vertex() {
  const VertexId v{next_id_++};
  store_.add_vertex(v);
  rep_.append_vertex(v);
  return v;
}

bool DynamicGraph::make_room_for(const Edge& e) {
  if (e.source == e.target) return false;
  const OrderIndex lower = rep_.index_of(e.target);
  const OrderIndex upper = rep_.index_of(e.source);
  if (upper < lower) return true;

  ReachResult forward = forward_reach(rep_, store_, e.target, upper, e.source);
  if (forward.hit_goal) return false;
  ReachResult backward = backward_reach(rep_, store_, e.source, lower);

  std::vector<VertexId>& target_set = forward.visited;
  std::vector<VertexId>& source_set = backward.visited;
  sort_by_index(rep_, target_set);
  sort_by_index(rep_, source_set);

  ReorderEvent event;
  if (observer_) {
    event.edge = e;
    event.source_set = source_set;
    event.target_set = target_set;
    event.source_before = indices(rep_, source_set);
    event.target_before = indices(rep_, target_set);
  }

  rep_.reassign_pool(source_set, target_set);
  ++stats_.reorders;

  if (observer_) {
    event.source_after = indices(rep_, source_set);
    event.target_after = indices(rep_, target_set);
    observer_(event);
  }
  return true;
}

EdgeClass DynamicGraph::add_edge(VertexId u, VertexId v) {
  require_vertex(u);
  require_vertex(v);
  const Edge e{u, v};
  if (auto existing = store_.edge_class(e)) return *existing;

  const EdgeClass c = make_room_for(e) ? EdgeClass::Acyclic : EdgeClass::Cyclic;
  store_.insert_edge_record(e, c);
  return c;
}

PromotionReport DynamicGraph::remove_edge(VertexId u, VertexId v) {
  // A cyclic edge is not part of the underlying DAG, so dropping it cannot
  // change any classification.
  if (store_.delete_edge_record(Edge{u, v}) == EdgeClass::Cyclic) return {};
  return rescan_cyclic_edges();
}

PromotionReport DynamicGraph::remove_vertex(VertexId v) {
  require_vertex(v);

  std::vector<Edge> incident;
  for (VertexId w : store_.out_neighbors_acyclic(v)) incident.push_back({v, w});
  for (VertexId w : store_.in_neighbors_acyclic(v)) incident.push_back({w, v});
  const bool touches_dag = !incident.empty();
  for (const Edge& e : store_.cyclic_edges()) {
    if (e.source == v || e.target == v) incident.push_back(e);
  }
  for (const Edge& e : incident) store_.delete_edge_record(e);

  store_.remove_vertex(v);
  rep_.remove_vertex_slot(v);
  if (!touches_dag) return {};
  return rescan_cyclic_edges();
}

PromotionReport DynamicGraph::rescan_cyclic_edges() {
  PromotionReport report;
  // Promotions only add acyclic edges, so reachability grows monotonically
  // during the pass and a single pass reaches the fixpoint.
  const std::vector<Edge> candidates(store_.cyclic_edges().begin(),
                                     store_.cyclic_edges().end());
  for (const Edge& e : candidates) {
    if (!make_room_for(e)) continue;
    store_.delete_edge_record(e);
    store_.insert_edge_record(e, EdgeClass::Acyclic);
    report.promoted.push_back(e);
    ++stats_.promotions;
  }
  return report;
}

std::vector<VertexId> DynamicGraph::topological_ordering() const {
  if (has_cycles()) throw CyclicError(cyclic_edge_count());
  return {rep_.order().begin(), rep_.order().end()};
}

bool DynamicGraph::is_reachable_acyclic(VertexId u, VertexId v) const {
  require_vertex(u);
  require_vertex(v);
  return forward_reach(rep_, store_, u, rep_.size() - 1, v).hit_goal;
}

}  // namespace rtopo
