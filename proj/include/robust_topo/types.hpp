#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>

namespace rtopo {

// Stable vertex handle. Issued once per graph and never reused, so it
// survives any number of reorders.
struct VertexId {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

inline std::ostream& operator<<(std::ostream& os, VertexId v) {
  return os << 'v' << v.value;
}

// Slot in the topological representation, 0 is leftmost.
using OrderIndex = std::size_t;

enum class EdgeClass : std::uint8_t {
  Acyclic,  // left-to-right in the representation
  Cyclic,   // right-to-left (or a self-loop)
};

inline const char* to_string(EdgeClass c) {
  return c == EdgeClass::Acyclic ? "acyclic" : "cyclic";
}

struct Edge {
  VertexId source;
  VertexId target;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '(' << e.source << ',' << e.target << ')';
}

}  // namespace rtopo

template <>
struct std::hash<rtopo::VertexId> {
  std::size_t operator()(rtopo::VertexId v) const noexcept {
    return std::hash<std::uint64_t>{}(v.value);
  }
};

template <>
struct std::hash<rtopo::Edge> {
  std::size_t operator()(const rtopo::Edge& e) const noexcept {
    std::uint64_t h = e.source.value * 0x9E3779B97F4A7C15ULL;
    h ^= e.target.value + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return std::hash<std::uint64_t>{}(h);
  }
};
