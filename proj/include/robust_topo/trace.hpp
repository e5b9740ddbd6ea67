#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "robust_topo/dynamic_graph.hpp"

namespace rtopo::trace {

// Trace format, one operation per line; blank lines and lines starting
// with '#' are ignored:
//
//   node <name>          delnode <name>
//   edge <u> <v>         deledge <u> <v>
//   order                reach <u> <v>
//   check

enum class OpKind { Node, DelNode, Edge, DelEdge, Order, Reach, Check };

const char* keyword(OpKind kind);

struct TraceOp {
  OpKind kind;
  std::string first;
  std::string second;
  std::size_t line = 0;

  bool is_mutation() const noexcept {
    return kind == OpKind::Node || kind == OpKind::DelNode ||
           kind == OpKind::Edge || kind == OpKind::DelEdge;
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

class SemanticError : public std::runtime_error {
 public:
  SemanticError(std::size_t line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

std::vector<TraceOp> parse_trace(std::string_view text);

enum ExitStatus : int {
  kOk = 0,
  kParseError = 1,
  kSemanticError = 2,
  kInvariantFailure = 3,
};

/// A replay in progress: one graph plus the trace-name <-> vertex mapping.
class Session {
 public:
  /// Applies one op and appends its output lines to `out`. Throws
  /// SemanticError on unknown names, duplicate nodes and unknown edges.
  /// Returns false if a `check` found violations.
  bool apply(const TraceOp& op, std::string& out);

  const DynamicGraph& graph() const noexcept { return graph_; }
  const std::unordered_map<VertexId, std::string>& names() const noexcept {
    return names_;
  }

 private:
  VertexId lookup(const std::string& name, std::size_t line) const;
  void emit_promotions(const PromotionReport& report, std::string& out) const;

  DynamicGraph graph_;
  std::unordered_map<std::string, VertexId> ids_;
  std::unordered_map<VertexId, std::string> names_;
};

struct ReplayResult {
  std::string output;
  ExitStatus status = kOk;
  std::string error;  // empty on success
};

/// Replays `ops` on a fresh graph. Stops at the first semantic error or
/// failed check; output produced up to that point is kept.
ReplayResult execute_trace(std::span<const TraceOp> ops);

/// Graphviz rendering of `g`. Vertices appear in representation order,
/// cyclic edges are dashed.
std::string export_dot(const DynamicGraph& g,
                       const std::unordered_map<VertexId, std::string>& names);

struct BenchStats {
  std::size_t ops = 0;
  std::size_t node_ops = 0;
  std::size_t delnode_ops = 0;
  std::size_t edge_ops = 0;
  std::size_t deledge_ops = 0;
  std::size_t incremental_ops = 0;
  std::size_t batch_ops = 0;
  std::uint64_t incremental_reorders = 0;
  std::uint64_t incremental_promotions = 0;
  double incremental_seconds = 0;
  double batch_seconds = 0;
  // Mutation points where has_cycles disagreed with the batch cycle flag.
  std::size_t disagreements = 0;
  bool final_cyclic = false;
  // Both strategies agree on the final cycle flag and, when acyclic, the
  // incremental order is valid for the batch strategy's edge set.
  bool final_agreement = false;
};

/// Replays a mutation-only trace twice: incrementally, and recomputing a
/// batch topological sort after every mutation. Throws SemanticError.
BenchStats bench_compare(std::span<const TraceOp> ops);

std::string format_bench(const BenchStats& stats);

}  // namespace rtopo::trace
