#include "egc/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "egc/errors.hpp"

namespace egc {

GraphSpec::GraphSpec(std::size_t v, std::vector<Edge> edges) : v_(v), adj_(v, 0) {
  if (v > kMaxVertices) throw InvalidArgument("graph has more than 64 vertices");
  for (auto& [a, b] : edges) {
    if (a == b) throw InvalidArgument("self-loop at vertex " + std::to_string(a));
    if (a >= v || b >= v) throw InvalidArgument("edge endpoint out of range");
    if (a > b) std::swap(a, b);
    if (adj_[a] >> b & 1)
      throw InvalidArgument("duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    adj_[a] |= std::uint64_t{1} << b;
    adj_[b] |= std::uint64_t{1} << a;
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

GraphSpec GraphSpec::complete(std::size_t v) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < v; ++i)
    for (Vertex j = i + 1; j < v; ++j) edges.emplace_back(i, j);
  return GraphSpec(v, std::move(edges));
}

std::size_t GraphSpec::degree(Vertex x) const { return std::popcount(adj_[x]); }

bool GraphSpec::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](std::uint64_t a) { return a == 0; });
}

}  // namespace egc
