#include "robust_topo/search.hpp"

#include <span>
#include <sstream>
#include <unordered_set>

#include "robust_topo/errors.hpp"

namespace rtopo {

namespace {

enum class Direction { Forward, Backward };

ReachResult depth_first(const TopologicalRepresentation& rep,
                        const GraphStore& store, VertexId start,
                        Direction direction, OrderIndex bound,
                        std::optional<VertexId> goal) {
  if (!rep.contains(start) || !store.contains(start)) {
    std::ostringstream os;
    os << start;
    throw GraphError(ErrorCode::UnknownVertex, os.str());
  }

  auto neighbors = [&](VertexId v) {
    return direction == Direction::Forward ? store.out_neighbors_acyclic(v)
                                           : store.in_neighbors_acyclic(v);
  };
  auto in_bound = [&](VertexId v) {
    const OrderIndex idx = rep.index_of(v);
    return direction == Direction::Forward ? idx <= bound : idx >= bound;
  };

  struct Frame {
    std::span<const VertexId> next;
  };

  ReachResult result;
  std::unordered_set<VertexId> seen{start};
  result.visited.push_back(start);
  if (goal && *goal == start) {
    result.hit_goal = true;
    return result;
  }

  std::vector<Frame> stack{{neighbors(start)}};
  while (!stack.empty()) {
    auto& frame = stack.back();
    if (frame.next.empty()) {
      stack.pop_back();
      continue;
    }
    const VertexId w = frame.next.front();
    frame.next = frame.next.subspan(1);
    if (seen.contains(w) || !in_bound(w)) continue;

    seen.insert(w);
    result.visited.push_back(w);
    if (goal && *goal == w) {
      result.hit_goal = true;
      return result;
    }
    stack.push_back({neighbors(w)});
  }
  return result;
}

}  // namespace

ReachResult forward_reach(const TopologicalRepresentation& rep,
                          const GraphStore& store, VertexId start,
                          OrderIndex upper_bound,
                          std::optional<VertexId> goal) {
  return depth_first(rep, store, start, Direction::Forward, upper_bound, goal);
}

ReachResult backward_reach(const TopologicalRepresentation& rep,
                           const GraphStore& store, VertexId start,
                           OrderIndex lower_bound) {
  return depth_first(rep, store, start, Direction::Backward, lower_bound,
                     std::nullopt);
}

}  // namespace rtopo
