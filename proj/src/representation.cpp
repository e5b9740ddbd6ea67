#include "robust_topo/representation.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "robust_topo/errors.hpp"

namespace rtopo {

namespace {

std::string describe(VertexId v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

OrderIndex TopologicalRepresentation::append_vertex(VertexId v) {
  const OrderIndex slot = vertex_at_.size();
  if (!index_of_.emplace(v, slot).second) {
    throw GraphError(ErrorCode::DuplicateVertex, describe(v));
  }
  vertex_at_.push_back(v);
  return slot;
}

OrderIndex TopologicalRepresentation::remove_vertex_slot(VertexId v) {
  auto it = index_of_.find(v);
  if (it == index_of_.end()) {
    throw GraphError(ErrorCode::UnknownVertex, describe(v));
  }
  const OrderIndex vacated = it->second;
  index_of_.erase(it);
  vertex_at_.erase(vertex_at_.begin() + static_cast<std::ptrdiff_t>(vacated));
  for (OrderIndex i = vacated; i < vertex_at_.size(); ++i) {
    index_of_[vertex_at_[i]] = i;
  }
  return vacated;
}

OrderIndex TopologicalRepresentation::index_of(VertexId v) const {
  auto it = index_of_.find(v);
  if (it == index_of_.end()) {
    throw GraphError(ErrorCode::UnknownVertex, describe(v));
  }
  return it->second;
}

VertexId TopologicalRepresentation::vertex_at(OrderIndex i) const {
  if (i >= vertex_at_.size()) {
    throw GraphError(ErrorCode::IndexOutOfRange,
                     std::to_string(i) + " >= " + std::to_string(size()));
  }
  return vertex_at_[i];
}

void TopologicalRepresentation::reassign_pool(
    std::span<const VertexId> first, std::span<const VertexId> second) {
  std::vector<OrderIndex> pool;
  pool.reserve(first.size() + second.size());

  auto collect = [&](std::span<const VertexId> block, const char* name) {
    OrderIndex previous = 0;
    for (std::size_t k = 0; k < block.size(); ++k) {
      const OrderIndex idx = index_of(block[k]);
      if (k > 0 && idx <= previous) {
        throw GraphError(ErrorCode::UnsortedPool,
                         std::string(name) + " not ascending at " +
                             describe(block[k]));
      }
      previous = idx;
      pool.push_back(idx);
    }
  };
  collect(first, "first");
  collect(second, "second");

  // Each block is already ascending, so a merge yields the sorted pool and
  // any equal neighbours expose a shared vertex.
  std::inplace_merge(pool.begin(),
                     pool.begin() + static_cast<std::ptrdiff_t>(first.size()),
                     pool.end());
  if (std::adjacent_find(pool.begin(), pool.end()) != pool.end()) {
    throw GraphError(ErrorCode::OverlappingPools,
                     "a vertex appears in both blocks");
  }

  std::size_t slot = 0;
  for (VertexId v : first) {
    vertex_at_[pool[slot]] = v;
    index_of_[v] = pool[slot];
    ++slot;
  }
  for (VertexId v : second) {
    vertex_at_[pool[slot]] = v;
    index_of_[v] = pool[slot];
    ++slot;
  }
}

void TopologicalRepresentation::force_swap_for_testing(OrderIndex i,
                                                       OrderIndex j) {
  std::swap(vertex_at_.at(i), vertex_at_.at(j));
  index_of_[vertex_at_[i]] = i;
  index_of_[vertex_at_[j]] = j;
}

}  // namespace rtopo
