#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "robust_topo/dynamic_graph.hpp"
#include "robust_topo/search.hpp"

namespace rtopo {

namespace {

template <typename... Parts>
std::string witness(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

// Three-colour DFS over every stored edge, both classes.
bool overarching_graph_has_cycle(const GraphStore& store) {
  std::unordered_map<VertexId, std::vector<VertexId>> successors;
  for (const auto& [e, c] : store.all_edges()) {
    successors[e.source].push_back(e.target);
  }
  enum class Colour { White, Grey, Black };
  std::unordered_map<VertexId, Colour> colour;
  for (VertexId root : store.vertices()) {
    if (colour[root] != Colour::White) continue;
    std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
    colour[root] = Colour::Grey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& succ = successors[v];
      if (next == succ.size()) {
        colour[v] = Colour::Black;
        stack.pop_back();
        continue;
      }
      const VertexId w = succ[next++];
      if (colour[w] == Colour::Grey) return true;
      if (colour[w] == Colour::White) {
        colour[w] = Colour::Grey;
        stack.emplace_back(w, 0);
      }
    }
  }
  return false;
}

}  // namespace

std::vector<InvariantViolation> check_invariants(
    const TopologicalRepresentation& rep, const GraphStore& store) {
  std::vector<InvariantViolation> out;
  auto fail = [&](const char* name, std::string w) {
    out.push_back({name, std::move(w)});
  };

  // Representation.
  const auto order = rep.order();
  for (OrderIndex i = 0; i < order.size(); ++i) {
    if (!rep.contains(order[i]) || rep.index_of(order[i]) != i) {
      fail("bijection", witness("slot ", i, " holds ", order[i]));
    }
  }
  if (store.vertices().size() != rep.size()) {
    fail("contiguity", witness(store.vertices().size(), " vertices over ",
                               rep.size(), " slots"));
  }
  for (VertexId v : store.vertices()) {
    if (!rep.contains(v)) {
      fail("contiguity", witness(v, " has no slot"));
    } else if (rep.index_of(v) >= rep.size()) {
      fail("contiguity", witness(v, " at ", rep.index_of(v)));
    }
  }
  if (!out.empty()) return out;  // index-based checks below need a sound rep

  // Store.
  std::size_t acyclic = 0;
  for (VertexId u : store.vertices()) {
    for (VertexId v : store.out_neighbors_acyclic(u)) {
      ++acyclic;
      const auto in = store.in_neighbors_acyclic(v);
      if (std::count(in.begin(), in.end(), u) != 1) {
        fail("mirror", witness(Edge{u, v}));
      }
      if (store.edge_class(Edge{u, v}) != EdgeClass::Acyclic) {
        fail("partition", witness(Edge{u, v}, " not classified acyclic"));
      }
      if (rep.index_of(u) >= rep.index_of(v)) {
        fail("I1", witness(Edge{u, v}));
      }
    }
  }
  std::size_t in_total = 0;
  for (VertexId v : store.vertices()) {
    in_total += store.in_neighbors_acyclic(v).size();
  }
  if (in_total != acyclic) {
    fail("mirror", witness(acyclic, " out entries vs ", in_total, " in"));
  }

  for (const Edge& e : store.cyclic_edges()) {
    if (store.edge_class(e) != EdgeClass::Cyclic) {
      fail("partition", witness(e, " not classified cyclic"));
    }
    const auto out_src = store.out_neighbors_acyclic(e.source);
    if (std::find(out_src.begin(), out_src.end(), e.target) != out_src.end()) {
      fail("partition", witness(e, " in both views"));
    }
    const bool reaches =
        forward_reach(rep, store, e.target, rep.size() - 1, e.source).hit_goal;
    if (!reaches) fail("I2", witness(e));
  }
  if (acyclic + store.cyclic_count() != store.edge_count()) {
    fail("partition", witness(acyclic, " + ", store.cyclic_count(),
                              " != ", store.edge_count()));
  }

  const bool cycle = overarching_graph_has_cycle(store);
  if (cycle != (store.cyclic_count() > 0)) {
    fail("I3", witness("cycle=", cycle, " cyclic_edges=", store.cyclic_count()));
  }
  return out;
}

}  // namespace rtopo
