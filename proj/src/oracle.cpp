#include "robust_topo/oracle.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "robust_topo/dynamic_graph.hpp"
#include "robust_topo/errors.hpp"
#include "robust_topo/search.hpp"

namespace rtopo {

namespace {

// Maps vertex ids onto 0..n-1, preserving id order.
class DenseIndex {
 public:
  explicit DenseIndex(std::span<const VertexId> vertices)
      : sorted_(vertices.begin(), vertices.end()) {
    if (!std::is_sorted(sorted_.begin(), sorted_.end())) {
      std::sort(sorted_.begin(), sorted_.end());
    }
    const std::uint64_t max_id = sorted_.empty() ? 0 : sorted_.back().value;
    // Ids are issued sequentially, so a flat table is the common case.
    if (max_id < 4 * sorted_.size() + 1024) {
      table_.assign(max_id + 1, kMissing);
      for (std::size_t i = 0; i < sorted_.size(); ++i) {
        table_[sorted_[i].value] = i;
      }
    } else {
      for (std::size_t i = 0; i < sorted_.size(); ++i) map_[sorted_[i]] = i;
    }
  }

  std::size_t size() const { return sorted_.size(); }
  VertexId vertex(std::size_t i) const { return sorted_[i]; }

  std::size_t at(VertexId v) const {
    std::size_t i = kMissing;
    if (!table_.empty() || map_.empty()) {
      if (v.value < table_.size()) i = table_[v.value];
    } else if (auto it = map_.find(v); it != map_.end()) {
      i = it->second;
    }
    if (i == kMissing) {
      std::ostringstream os;
      os << v << " is not a vertex";
      throw GraphError(ErrorCode::DanglingEdge, os.str());
    }
    return i;
  }

 private:
  static constexpr std::size_t kMissing = static_cast<std::size_t>(-1);
  std::vector<VertexId> sorted_;
  std::vector<std::size_t> table_;
  std::unordered_map<VertexId, std::size_t> map_;
};

}  // namespace

BatchResult batch_toposort(std::span<const VertexId> vertices,
                           std::span<const Edge> edges, bool with_closure) {
  const DenseIndex dense(vertices);
  const std::size_t n = dense.size();

  // Flat successor lists: succ[first[v] .. first[v + 1]).
  std::vector<std::size_t> first(n + 1, 0);
  std::vector<std::size_t> in_degree(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> dense_edges;
  dense_edges.reserve(edges.size());
  for (const Edge& e : edges) {
    const std::size_t s = dense.at(e.source);
    const std::size_t t = dense.at(e.target);
    dense_edges.emplace_back(s, t);
    ++first[s + 1];
    ++in_degree[t];
  }
  for (std::size_t i = 0; i < n; ++i) first[i + 1] += first[i];
  std::vector<std::size_t> succ(edges.size());
  {
    std::vector<std::size_t> fill(first.begin(), first.end() - 1);
    for (const auto& [s, t] : dense_edges) succ[fill[s]++] = t;
  }
  auto successors = [&](std::size_t v) {
    return std::span<const std::size_t>(succ.data() + first[v],
                                        first[v + 1] - first[v]);
  };

  std::priority_queue<std::size_t, std::vector<std::size_t>,
                      std::greater<std::size_t>>
      ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_degree[i] == 0) ready.push(i);
  }
  std::vector<VertexId> ordering;
  ordering.reserve(n);
  while (!ready.empty()) {
    const std::size_t v = ready.top();
    ready.pop();
    ordering.push_back(dense.vertex(v));
    for (std::size_t w : successors(v)) {
      if (--in_degree[w] == 0) ready.push(w);
    }
  }

  BatchResult result;
  result.cyclic = ordering.size() != n;
  if (!result.cyclic) result.ordering = std::move(ordering);

  if (with_closure) {
    std::vector<char> mark(n);
    std::vector<std::size_t> stack;
    for (std::size_t root = 0; root < n; ++root) {
      std::fill(mark.begin(), mark.end(), 0);
      const auto from_root = successors(root);
      stack.assign(from_root.begin(), from_root.end());
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        if (mark[v]) continue;
        mark[v] = 1;
        const auto next = successors(v);
        stack.insert(stack.end(), next.begin(), next.end());
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (mark[v] && v != root) {
          result.closure.emplace(dense.vertex(root), dense.vertex(v));
        }
      }
    }
  }
  return result;
}

bool is_valid_topological_order(std::span<const VertexId> order,
                                std::span<const VertexId> vertices,
                                std::span<const Edge> edges) {
  if (order.size() != vertices.size()) return false;
  std::unordered_map<VertexId, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!position.emplace(order[i], i).second) return false;
  }
  for (VertexId v : vertices) {
    if (!position.contains(v)) return false;
  }
  for (const Edge& e : edges) {
    auto s = position.find(e.source);
    auto t = position.find(e.target);
    if (s == position.end() || t == position.end()) return false;
    if (s->second >= t->second) return false;
  }
  return true;
}

std::vector<Discrepancy> differential_check(
    const TopologicalRepresentation& rep, const GraphStore& store) {
  std::vector<Discrepancy> out;
  const std::vector<VertexId> vertices(store.vertices().begin(),
                                       store.vertices().end());
  std::vector<Edge> all, acyclic;
  for (const auto& [e, c] : store.all_edges()) {
    all.push_back(e);
    if (c == EdgeClass::Acyclic) acyclic.push_back(e);
  }

  const BatchResult full = batch_toposort(vertices, all, false);
  const bool incremental_cyclic = store.cyclic_count() > 0;
  if (full.cyclic != incremental_cyclic) {
    std::ostringstream os;
    os << "oracle cyclic=" << full.cyclic
       << " incremental cyclic=" << incremental_cyclic;
    out.push_back({"cycle-agreement", os.str()});
  }
  if (!incremental_cyclic &&
      !is_valid_topological_order(rep.order(), vertices, all)) {
    out.push_back({"order-validity", "stored order violates an edge"});
  }

  // Acyclic-only reachability as seen by the incremental search.
  const BatchResult dag = batch_toposort(vertices, acyclic, true);
  if (rep.size() == vertices.size() && !rep.empty()) {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (VertexId u : vertices) {
      if (!rep.contains(u)) continue;
      for (VertexId v : forward_reach(rep, store, u, rep.size() - 1).visited) {
        if (v != u) seen.emplace(u, v);
      }
    }
    if (seen != dag.closure) {
      std::ostringstream os;
      os << seen.size() << " reachable pairs vs oracle " << dag.closure.size();
      out.push_back({"reachability", os.str()});
    }
  }
  return out;
}

std::vector<Discrepancy> differential_check(const DynamicGraph& g) {
  return differential_check(g.representation(), g.store());
}

}  // namespace rtopo
