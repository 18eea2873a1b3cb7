#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "egc/colouring.hpp"

namespace egc {

// Default bound on the vertex count of a materialized amalgamation.
inline constexpr std::size_t kDefaultMaxVertices = 10'000;

// Gradient class of an edge in the n x m grid.
enum class Slope : std::uint8_t { plus, minus, zero, infinity };

/// The four components of an amalgamation colour. An empty optional is the
/// fresh colour `*`.
struct AmalgamTuple {
  std::optional<ColourId> horizontal;            // colour of the projection onto [n]
  std::optional<ColourId> vertical;              // colour of the projection onto [m]
  Slope slope = Slope::zero;
  std::optional<std::pair<Vertex, Vertex>> rows;  // {u1 < u2} for vertical edges

  friend bool operator==(const AmalgamTuple&, const AmalgamTuple&) = default;
};

struct AmalgamMeta {
  std::size_t left_size = 1;   // n
  std::size_t right_size = 1;  // m
  std::vector<AmalgamTuple> tuples;  // indexed by canonical colour id

  friend bool operator==(const AmalgamMeta&, const AmalgamMeta&) = default;
};

struct GridPoint {
  Vertex column;  // v in [n]
  Vertex row;     // u in [m]
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// c (x) d on n*m vertices; vertex (v, u) has id v*m + u.
struct AmalgamColouring {
  Colouring colouring;
  AmalgamMeta meta;

  Vertex vertex(GridPoint p) const {
    return static_cast<Vertex>(p.column * meta.right_size + p.row);
  }
  GridPoint point(Vertex x) const {
    return {static_cast<Vertex>(x / meta.right_size), static_cast<Vertex>(x % meta.right_size)};
  }
};

struct AmalgamOptions {
  std::size_t max_vertices = kDefaultMaxVertices;
};

// Throws CapacityError when n*m exceeds options.max_vertices.
AmalgamColouring amalgamate(const Colouring& c, const Colouring& d, AmalgamOptions options = {});

/// Exact number of colours of c (x) d given the colour counts of c and d and
/// the size m of d's vertex set: (2 kd + 1) kc + C(m, 2).
template <class Int>
Int predicted_colour_count(const Int& kc, const Int& kd, const Int& m) {
  return (2 * kd + 1) * kc + m * (m - 1) / 2;
}

// Post-composes c with `map` (indexed by colour id) and canonicalizes.
// Throws InvalidArgument if a colour used by c has no image.
Colouring weaken(const Colouring& c, std::span<const ColourId> map);

// Projection of an amalgamation onto component 1..4.
Colouring component(const AmalgamColouring& a, int index);

// Edge e gets the pair (c1(e), c2(e)).
Colouring product(const Colouring& c1, const Colouring& c2);

const char* slope_symbol(Slope s);

}  // namespace egc
