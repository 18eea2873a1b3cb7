#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "egc/colouring.hpp"

namespace egc {

/// A small simple graph on vertices 0..v-1 (v <= 64).
class GraphSpec {
 public:
  using Edge = std::pair<Vertex, Vertex>;
  static constexpr std::size_t kMaxVertices = 64;

  GraphSpec() = default;
  // Throws InvalidArgument on self-loops, duplicate edges, or endpoints >= v.
  GraphSpec(std::size_t v, std::vector<Edge> edges);

  static GraphSpec complete(std::size_t v);

  std::size_t vertices() const { return v_; }
  // Normalized (i < j), sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  std::uint64_t neighbours(Vertex x) const { return adj_[x]; }
  bool adjacent(Vertex x, Vertex y) const { return (adj_[x] >> y) & 1; }
  std::size_t degree(Vertex x) const;

  bool is_complete() const { return edges_.size() == edge_count(v_); }
  bool has_isolated_vertex() const;

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;

 private:
  std::size_t v_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

}  // namespace egc
