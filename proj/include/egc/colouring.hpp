#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace egc {

using Vertex = std::uint32_t;
using ColourId = std::uint32_t;
using EdgeIndex = std::uint64_t;

constexpr EdgeIndex edge_count(std::uint64_t n) { return n * (n - (n > 0)) / 2; }

// Position of edge {i, j}, i < j, in lexicographic edge order of K_n.
constexpr EdgeIndex edge_index(std::uint64_t n, std::uint64_t i, std::uint64_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// An edge-colouring of the complete graph on vertices 0..n-1.
///
/// Colours are stored flat in lexicographic edge order. Every stored id is
/// below palette_size(); a canonical colouring additionally uses ids
/// 0..k-1 in order of first appearance, so palette_size() equals the number
/// of colours present.
class Colouring {
 public:
  Colouring() = default;

  // Throws InvalidArgument on n == 0, wrong length, or an id >= k.
  Colouring(std::size_t n, std::size_t k, std::vector<ColourId> colours);

  std::size_t vertices() const { return n_; }
  std::size_t palette_size() const { return k_; }
  EdgeIndex edges() const { return colours_.size(); }

  std::span<const ColourId> colours() const { return colours_; }

  ColourId operator()(Vertex i, Vertex j) const {
    return i < j ? colours_[edge_index(n_, i, j)] : colours_[edge_index(n_, j, i)];
  }
  ColourId at_edge(EdgeIndex e) const { return colours_[e]; }

  bool is_canonical() const;

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  std::size_t n_ = 1;
  std::size_t k_ = 0;
  std::vector<ColourId> colours_;
};

Colouring rainbow(std::size_t n);
Colouring trivial(std::size_t n);

// Relabels colours to 0..k'-1 in order of first appearance.
Colouring canonicalize(const Colouring& c);

// Induced colouring on `subset`, vertices relabelled 0..|subset|-1 by
// ascending id, then canonicalized. Throws on out-of-range or repeated ids.
Colouring restrict(const Colouring& c, std::span<const Vertex> subset);

// First `count` vertices.
Colouring restrict_prefix(const Colouring& c, std::size_t count);

// Number of distinct colours present.
std::size_t colour_count(const Colouring& c);

// Builds a canonical colouring of K_n from arbitrary 64-bit keys, one per
// edge in lexicographic order; equal keys become equal colours.
Colouring from_keys(std::size_t n, std::span<const std::uint64_t> keys);

}  // namespace egc
