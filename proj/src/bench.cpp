#include <chrono>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include "robust_topo/oracle.hpp"
#include "robust_topo/trace.hpp"

namespace rtopo::trace {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

VertexId find_name(const std::unordered_map<std::string, VertexId>& ids,
                   const std::string& name, std::size_t line) {
  auto it = ids.find(name);
  if (it == ids.end()) throw SemanticError(line, "unknown node '" + name + "'");
  return it->second;
}

// Raw vertex and edge lists, with swap-remove bookkeeping, fed to the
// batch sorter after every mutation. Ids are issued in node-op order, the
// same way DynamicGraph issues them.
class BatchReplay {
 public:
  void apply(const TraceOp& op) {
    switch (op.kind) {
      case OpKind::Node: {
        const VertexId v{next_id_++};
        ids_.emplace(op.first, v);
        vertex_pos_.emplace(v, vertices_.size());
        vertices_.push_back(v);
        break;
      }
      case OpKind::DelNode: {
        const VertexId v = find_name(ids_, op.first, op.line);
        ids_.erase(op.first);
        for (std::size_t i = edges_.size(); i-- > 0;) {
          if (edges_[i].source == v || edges_[i].target == v) {
            erase_edge(edges_[i]);
          }
        }
        const std::size_t pos = vertex_pos_.at(v);
        vertex_pos_.erase(v);
        if (pos + 1 != vertices_.size()) {
          vertices_[pos] = vertices_.back();
          vertex_pos_[vertices_[pos]] = pos;
        }
        vertices_.pop_back();
        break;
      }
      case OpKind::Edge: {
        const Edge e{find_name(ids_, op.first, op.line),
                     find_name(ids_, op.second, op.line)};
        if (edge_pos_.emplace(e, edges_.size()).second) edges_.push_back(e);
        break;
      }
      case OpKind::DelEdge: {
        const Edge e{find_name(ids_, op.first, op.line),
                     find_name(ids_, op.second, op.line)};
        erase_edge(e);
        break;
      }
      default:
        break;
    }
  }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  void erase_edge(Edge e) {
    const std::size_t pos = edge_pos_.at(e);
    edge_pos_.erase(e);
    if (pos + 1 != edges_.size()) {
      edges_[pos] = edges_.back();
      edge_pos_[edges_[pos]] = pos;
    }
    edges_.pop_back();
  }

  std::uint64_t next_id_ = 0;
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<VertexId> vertices_;
  std::unordered_map<VertexId, std::size_t> vertex_pos_;
  std::vector<Edge> edges_;
  std::unordered_map<Edge, std::size_t> edge_pos_;
};

}  // namespace

BenchStats bench_compare(std::span<const TraceOp> ops) {
  BenchStats stats;
  for (const TraceOp& op : ops) {
    if (!op.is_mutation()) {
      throw SemanticError(op.line, std::string("'") + keyword(op.kind) +
                                       "' in a mutation-only trace");
    }
    ++stats.ops;
    switch (op.kind) {
      case OpKind::Node: ++stats.node_ops; break;
      case OpKind::DelNode: ++stats.delnode_ops; break;
      case OpKind::Edge: ++stats.edge_ops; break;
      case OpKind::DelEdge: ++stats.deledge_ops; break;
      default: break;
    }
  }

  std::vector<char> incremental_cyclic;
  incremental_cyclic.reserve(ops.size());
  DynamicGraph graph;
  {
    std::unordered_map<std::string, VertexId> ids;
    const auto start = Clock::now();
    for (const TraceOp& op : ops) {
      switch (op.kind) {
        case OpKind::Node:
          if (!ids.emplace(op.first, VertexId{}).second) {
            throw SemanticError(op.line, "duplicate node '" + op.first + "'");
          }
          ids[op.first] = graph.add_vertex();
          break;
        case OpKind::DelNode:
          graph.remove_vertex(find_name(ids, op.first, op.line));
          ids.erase(op.first);
          break;
        case OpKind::Edge:
          graph.add_edge(find_name(ids, op.first, op.line),
                         find_name(ids, op.second, op.line));
          break;
        case OpKind::DelEdge: {
          const VertexId u = find_name(ids, op.first, op.line);
          const VertexId v = find_name(ids, op.second, op.line);
          if (!graph.edge_class(u, v)) {
            throw SemanticError(op.line, "unknown edge " + op.first + " -> " +
                                             op.second);
          }
          graph.remove_edge(u, v);
          break;
        }
        default:
          break;
      }
      ++stats.incremental_ops;
      incremental_cyclic.push_back(graph.has_cycles());
    }
    stats.incremental_seconds = seconds_since(start);
  }
  stats.incremental_reorders = graph.stats().reorders;
  stats.incremental_promotions = graph.stats().promotions;

  BatchReplay batch;
  bool batch_cyclic = false;
  {
    const auto start = Clock::now();
    for (const TraceOp& op : ops) {
      batch.apply(op);
      batch_cyclic =
          batch_toposort(batch.vertices(), batch.edges(), false).cyclic;
      if (static_cast<bool>(incremental_cyclic[stats.batch_ops]) !=
          batch_cyclic) {
        ++stats.disagreements;
      }
      ++stats.batch_ops;
    }
    stats.batch_seconds = seconds_since(start);
  }

  stats.final_cyclic = graph.has_cycles();
  stats.final_agreement = stats.final_cyclic == batch_cyclic;
  if (stats.final_agreement && !stats.final_cyclic) {
    stats.final_agreement = is_valid_topological_order(
        graph.topological_ordering(), batch.vertices(), batch.edges());
  }
  return stats;
}

std::string format_bench(const BenchStats& s) {
  std::ostringstream os;
  os << "ops " << s.ops << '\n'
     << "node_ops " << s.node_ops << '\n'
     << "delnode_ops " << s.delnode_ops << '\n'
     << "edge_ops " << s.edge_ops << '\n'
     << "deledge_ops " << s.deledge_ops << '\n'
     << "incremental_ops " << s.incremental_ops << '\n'
     << "batch_ops " << s.batch_ops << '\n'
     << "incremental_reorders " << s.incremental_reorders << '\n'
     << "incremental_promotions " << s.incremental_promotions << '\n'
     << std::fixed << std::setprecision(6)
     << "incremental_seconds " << s.incremental_seconds << '\n'
     << "batch_seconds " << s.batch_seconds << '\n';
  if (s.incremental_seconds > 0) {
    os << std::setprecision(2) << "speedup "
       << s.batch_seconds / s.incremental_seconds << '\n';
  } else {
    os << "speedup inf\n";
  }
  os << "disagreements " << s.disagreements << '\n'
     << "final_cyclic " << (s.final_cyclic ? "true" : "false") << '\n'
     << "final_agreement " << (s.final_agreement ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace rtopo::trace
