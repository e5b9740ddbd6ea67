#include "robust_topo/graph_store.hpp"

#include <algorithm>
#include <sstream>

#include "robust_topo/errors.hpp"

namespace rtopo {

namespace {

template <typename T>
std::string describe(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

template <typename T>
void erase_first(std::vector<T>& items, const T& value) {
  auto it = std::find(items.begin(), items.end(), value);
  if (it != items.end()) items.erase(it);
}

}  // namespace

void GraphStore::add_vertex(VertexId v) {
  if (out_.contains(v)) {
    throw GraphError(ErrorCode::DuplicateVertex, describe(v));
  }
  out_.emplace(v, std::vector<VertexId>{});
  in_.emplace(v, std::vector<VertexId>{});
  vertices_.push_back(v);
}

void GraphStore::remove_vertex(VertexId v) {
  auto out = out_.find(v);
  if (out == out_.end()) {
    throw GraphError(ErrorCode::UnknownVertex, describe(v));
  }
  auto in = in_.find(v);
  const bool touches_cyclic =
      std::any_of(cyclic_.begin(), cyclic_.end(), [v](const Edge& e) {
        return e.source == v || e.target == v;
      });
  if (!out->second.empty() || !in->second.empty() || touches_cyclic) {
    throw GraphError(ErrorCode::DanglingEdge,
                     describe(v) + " still has incident edges");
  }
  out_.erase(out);
  in_.erase(in);
  erase_first(vertices_, v);
}

void GraphStore::insert_edge_record(const Edge& e, EdgeClass c) {
  auto out = out_.find(e.source);
  auto in = in_.find(e.target);
  if (out == out_.end()) {
    throw GraphError(ErrorCode::UnknownVertex, describe(e.source));
  }
  if (in == in_.end()) {
    throw GraphError(ErrorCode::UnknownVertex, describe(e.target));
  }
  if (!classes_.emplace(e, c).second) {
    throw GraphError(ErrorCode::DuplicateEdge, describe(e));
  }
  if (c == EdgeClass::Acyclic) {
    out->second.push_back(e.target);
    in->second.push_back(e.source);
  } else {
    cyclic_.push_back(e);
  }
}

EdgeClass GraphStore::delete_edge_record(const Edge& e) {
  auto it = classes_.find(e);
  if (it == classes_.end()) {
    throw GraphError(ErrorCode::UnknownEdge, describe(e));
  }
  const EdgeClass c = it->second;
  classes_.erase(it);
  if (c == EdgeClass::Acyclic) {
    erase_first(out_.at(e.source), e.target);
    erase_first(in_.at(e.target), e.source);
  } else {
    erase_first(cyclic_, e);
  }
  return c;
}

std::optional<EdgeClass> GraphStore::edge_class(const Edge& e) const {
  auto it = classes_.find(e);
  if (it == classes_.end()) return std::nullopt;
  return it->second;
}

const std::vector<VertexId>& GraphStore::adjacency(
    const std::unordered_map<VertexId, std::vector<VertexId>>& side,
    VertexId v) const {
  auto it = side.find(v);
  if (it == side.end()) {
    throw GraphError(ErrorCode::UnknownVertex, describe(v));
  }
  return it->second;
}

std::span<const VertexId> GraphStore::out_neighbors_acyclic(VertexId u) const {
  return adjacency(out_, u);
}

std::span<const VertexId> GraphStore::in_neighbors_acyclic(VertexId v) const {
  return adjacency(in_, v);
}

std::vector<std::pair<Edge, EdgeClass>> GraphStore::all_edges() const {
  std::vector<std::pair<Edge, EdgeClass>> edges;
  edges.reserve(classes_.size());
  for (VertexId u : vertices_) {
    for (VertexId v : out_.at(u)) {
      edges.emplace_back(Edge{u, v}, EdgeClass::Acyclic);
    }
  }
  for (const Edge& e : cyclic_) edges.emplace_back(e, EdgeClass::Cyclic);
  return edges;
}

}  // namespace rtopo
