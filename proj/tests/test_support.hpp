#pragma once

// Test-only oracles and generators. Deliberately independent of the
// library's search and ordering code.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "robust_topo/dynamic_graph.hpp"
#include "robust_topo/types.hpp"

namespace rtopo::test_support {

// Warshall closure over an explicit vertex list. Pairs (u, v), u != v.
inline std::set<std::pair<VertexId, VertexId>> warshall_closure(
    const std::vector<VertexId>& vertices, const std::vector<Edge>& edges) {
  const std::size_t n = vertices.size();
  std::map<VertexId, std::size_t> at;
  for (std::size_t i = 0; i < n; ++i) at[vertices[i]] = i;
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (const Edge& e : edges) r[at.at(e.source)][at.at(e.target)] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  std::set<std::pair<VertexId, VertexId>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && r[i][j]) out.emplace(vertices[i], vertices[j]);
  return out;
}

// Cycle iff some vertex reaches itself (self-loops included).
inline bool warshall_has_cycle(const std::vector<VertexId>& vertices,
                               const std::vector<Edge>& edges) {
  for (const Edge& e : edges)
    if (e.source == e.target) return true;
  const auto closure = warshall_closure(vertices, edges);
  for (const auto& [u, v] : closure)
    if (closure.contains({v, u})) return true;
  return false;
}

inline std::vector<Edge> edges_of_class(const GraphStore& store, EdgeClass c) {
  std::vector<Edge> out;
  for (const auto& [e, cls] : store.all_edges())
    if (cls == c) out.push_back(e);
  return out;
}

inline std::vector<Edge> all_edges(const GraphStore& store) {
  std::vector<Edge> out;
  for (const auto& [e, cls] : store.all_edges()) out.push_back(e);
  return out;
}

inline std::vector<VertexId> vertices_of(const DynamicGraph& g) {
  return {g.store().vertices().begin(), g.store().vertices().end()};
}

enum class RandomOpKind { AddVertex, RemoveVertex, AddEdge, RemoveEdge };

struct RandomOp {
  RandomOpKind kind;
  VertexId u, v;
};

// Drives a DynamicGraph with a mixed random workload. Vertex count stays
// at or below max_vertices.
class RandomWorkload {
 public:
  RandomWorkload(std::uint64_t seed, std::size_t max_vertices)
      : rng_(seed), max_vertices_(max_vertices) {}

  std::mt19937_64& rng() { return rng_; }

  // Picks and applies one operation; returns it.
  RandomOp step(DynamicGraph& g) {
    const auto vertices = vertices_of(g);
    const auto edges = all_edges(g.store());
    std::uniform_int_distribution<int> pick(0, 99);
    const int roll = pick(rng_);

    if (vertices.size() < 2 ||
        (roll < 15 && vertices.size() < max_vertices_)) {
      return {RandomOpKind::AddVertex, g.add_vertex(), {}};
    }
    if (roll < 20) {
      const VertexId v = choose(vertices);
      g.remove_vertex(v);
      return {RandomOpKind::RemoveVertex, v, {}};
    }
    if (roll < 70 || edges.empty()) {
      const VertexId u = choose(vertices);
      // Occasional self-loops.
      const VertexId v = pick(rng_) < 3 ? u : choose(vertices);
      g.add_edge(u, v);
      return {RandomOpKind::AddEdge, u, v};
    }
    const Edge e = choose(edges);
    g.remove_edge(e.source, e.target);
    return {RandomOpKind::RemoveEdge, e.source, e.target};
  }

  template <typename T>
  T choose(const std::vector<T>& items) {
    std::uniform_int_distribution<std::size_t> d(0, items.size() - 1);
    return items[d(rng_)];
  }

 private:
  std::mt19937_64 rng_;
  std::size_t max_vertices_;
};

}  // namespace rtopo::test_support
