#include <algorithm>
#include <cctype>

#include "robust_topo/trace.hpp"

namespace rtopo::trace {

namespace {

bool is_plain_id(const std::string& s) {
  if (s.empty()) return false;
  const bool numeral = std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c);
  });
  if (numeral) return true;
  if (std::isdigit(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::string dot_id(const std::string& name) {
  if (is_plain_id(name)) return name;
  std::string quoted = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

std::string export_dot(const DynamicGraph& g,
                       const std::unordered_map<VertexId, std::string>& names) {
  auto name = [&](VertexId v) {
    auto it = names.find(v);
    return dot_id(it != names.end() ? it->second
                                    : "v" + std::to_string(v.value));
  };

  std::string out = "digraph g {\n";
  const auto order = g.representation().order();
  for (VertexId v : order) out += "  " + name(v) + ";\n";
  for (VertexId u : order) {
    for (VertexId v : g.store().out_neighbors_acyclic(u)) {
      out += "  " + name(u) + " -> " + name(v) + ";\n";
    }
  }
  for (const Edge& e : g.store().cyclic_edges()) {
    out += "  " + name(e.source) + " -> " + name(e.target) +
           " [style=dashed];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace rtopo::trace
