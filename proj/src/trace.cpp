#include "robust_topo/trace.hpp"

#include <algorithm>
#include <sstream>

#include "robust_topo/errors.hpp"

namespace rtopo::trace {

namespace {

struct KeywordInfo {
  OpKind kind;
  const char* word;
  std::size_t arity;
};

constexpr KeywordInfo kKeywords[] = {
    {OpKind::Node, "node", 1},       {OpKind::DelNode, "delnode", 1},
    {OpKind::Edge, "edge", 2},       {OpKind::DelEdge, "deledge", 2},
    {OpKind::Order, "order", 0},     {OpKind::Reach, "reach", 2},
    {OpKind::Check, "check", 0},
};

}  // namespace

const char* keyword(OpKind kind) {
  for (const auto& k : kKeywords) {
    if (k.kind == kind) return k.word;
  }
  return "?";
}

std::vector<TraceOp> parse_trace(std::string_view text) {
  std::vector<TraceOp> ops;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(std::move(t));
    if (tokens.empty() || tokens.front().front() == '#') continue;

    const KeywordInfo* info = nullptr;
    for (const auto& k : kKeywords) {
      if (tokens.front() == k.word) info = &k;
    }
    if (info == nullptr) {
      throw ParseError(line, "unknown keyword '" + tokens.front() + "'");
    }
    if (tokens.size() - 1 != info->arity) {
      throw ParseError(line, std::string(info->word) + " takes " +
                                 std::to_string(info->arity) + " argument(s)");
    }
    TraceOp op{info->kind, {}, {}, line};
    if (info->arity > 0) op.first = tokens[1];
    if (info->arity > 1) op.second = tokens[2];
    ops.push_back(std::move(op));
  }
  return ops;
}

VertexId Session::lookup(const std::string& name, std::size_t line) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) throw SemanticError(line, "unknown node '" + name + "'");
  return it->second;
}

void Session::emit_promotions(const PromotionReport& report,
                              std::string& out) const {
  for (const Edge& e : report.promoted) {
    out += "promoted " + names_.at(e.source) + ' ' + names_.at(e.target) + '\n';
  }
}

bool Session::apply(const TraceOp& op, std::string& out) {
  switch (op.kind) {
    case OpKind::Node: {
      if (ids_.contains(op.first)) {
        throw SemanticError(op.line, "duplicate node '" + op.first + "'");
      }
      const VertexId v = graph_.add_vertex();
      ids_.emplace(op.first, v);
      names_.emplace(v, op.first);
      return true;
    }
    case OpKind::DelNode: {
      const VertexId v = lookup(op.first, op.line);
      const PromotionReport report = graph_.remove_vertex(v);
      ids_.erase(op.first);
      emit_promotions(report, out);
      names_.erase(v);
      return true;
    }
    case OpKind::Edge: {
      const VertexId u = lookup(op.first, op.line);
      const VertexId v = lookup(op.second, op.line);
      const EdgeClass c = graph_.add_edge(u, v);
      out += "edge " + op.first + ' ' + op.second + ' ' + to_string(c) + '\n';
      return true;
    }
    case OpKind::DelEdge: {
      const VertexId u = lookup(op.first, op.line);
      const VertexId v = lookup(op.second, op.line);
      if (!graph_.edge_class(u, v)) {
        throw SemanticError(op.line, "unknown edge " + op.first + " -> " +
                                         op.second);
      }
      emit_promotions(graph_.remove_edge(u, v), out);
      return true;
    }
    case OpKind::Order: {
      if (graph_.has_cycles()) {
        out += "cyclic " + std::to_string(graph_.cyclic_edge_count()) + '\n';
        return true;
      }
      out += "order";
      for (VertexId v : graph_.topological_ordering()) out += ' ' + names_.at(v);
      out += '\n';
      return true;
    }
    case OpKind::Reach: {
      const VertexId u = lookup(op.first, op.line);
      const VertexId v = lookup(op.second, op.line);
      out += "reach " + op.first + ' ' + op.second + ' ' +
             (graph_.is_reachable_acyclic(u, v) ? "true" : "false") + '\n';
      return true;
    }
    case OpKind::Check: {
      const auto violations = graph_.check_invariants();
      if (violations.empty()) {
        out += "check ok\n";
        return true;
      }
      std::vector<std::string> reported;
      for (const auto& violation : violations) {
        if (std::find(reported.begin(), reported.end(), violation.invariant) !=
            reported.end()) {
          continue;
        }
        reported.push_back(violation.invariant);
        out += "check FAIL " + violation.invariant + '\n';
      }
      return false;
    }
  }
  return true;
}

ReplayResult execute_trace(std::span<const TraceOp> ops) {
  ReplayResult result;
  Session session;
  for (const TraceOp& op : ops) {
    try {
      if (!session.apply(op, result.output)) {
        result.status = kInvariantFailure;
        result.error = "line " + std::to_string(op.line) +
                       ": invariant check failed";
        return result;
      }
    } catch (const SemanticError& e) {
      result.status = kSemanticError;
      result.error = e.what();
      return result;
    }
  }
  return result;
}

}  // namespace rtopo::trace
