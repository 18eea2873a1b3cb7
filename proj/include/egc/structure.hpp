#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "egc/graph.hpp"

namespace egc {

// Search guard for the subset-based procedures below.
inline constexpr std::size_t kStructureMaxVertices = 24;

using VertexSet = std::vector<Vertex>;

/// V_0 = V(H) > V_1 > ... > V_k = {} with every H[V_i] even-sized and every
/// V_i \ V_{i+1} independent.
struct DecompositionChain {
  std::vector<VertexSet> chain;
};

std::optional<DecompositionChain> is_even_decomposable(const GraphSpec& h);

// Independent checker for the three chain conditions.
bool is_valid_chain(const GraphSpec& h, const DecompositionChain& chain);

// Smallest (then lexicographically first) independent set I with at least two
// edges leaving it such that H - I, minus its isolated vertices, is empty or
// non-complete. Requires H non-complete without isolated vertices.
VertexSet find_independent_set_b2(const GraphSpec& h);

// Whether I meets both conditions above.
bool satisfies_b2(const GraphSpec& h, const VertexSet& independent);

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

// 1 / (|V(H)| - 1): exponent of the polynomial lower bound on the number of
// colours of an H-unique colouring, for non-complete H without isolated vertices.
Rational unique_lower_bound_exponent(const GraphSpec& h);

}  // namespace egc
