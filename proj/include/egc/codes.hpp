#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "egc/colouring.hpp"
#include "egc/graph.hpp"
#include "egc/verify.hpp"

namespace egc {

/// Packed vector over the two-element field.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool none() const;
  std::size_t count() const;
  // Lowest set bit, or size() when none.
  std::size_t first() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row r holds the indicator of colour class r over the edges of K_n.
/// The code is the kernel of this matrix.
struct ParityCheckMatrix {
  std::size_t n = 1;
  std::vector<BitVector> rows;

  std::size_t k() const { return rows.size(); }
  EdgeIndex columns() const { return edge_count(n); }
};

struct CodeReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t rank = 0;
  std::uint64_t dimension = 0;   // C(n,2) - rank
  std::int64_t density_log2 = 0;  // -rank
};

ParityCheckMatrix parity_matrix(const Colouring& c);

// Rank by elimination over GF(2).
std::size_t gf2_rank(std::span<const BitVector> rows);

CodeReport code_report(const ParityCheckMatrix& mx);

// Parity of each colour class among the edges of h placed by `placement`
// (placement[i] is the host vertex of h's vertex i).
BitVector image_parity(const GraphSpec& h, std::span<const Vertex> placement,
                       const ParityCheckMatrix& mx);

// Placements enumerated beyond this need force.
inline constexpr std::uint64_t kPlacementLimit = 1'000'000'000;

struct ImageCheckReport {
  std::size_t n = 0;
  std::size_t h_vertices = 0;
  std::uint64_t subsets_checked = 0;       // vertex subsets visited in lexicographic order
  std::optional<std::vector<Vertex>> violation;  // placement with zero parity vector

  bool passed() const { return !violation; }
};

struct ImageCheckOptions {
  unsigned threads = 0;
  bool force = false;
};

// Searches every placement of h for an image with zero parity vector, i.e. an
// even-chromatic copy of h. Cliques use one placement per vertex subset.
ImageCheckReport verify_code_avoids(const GraphSpec& h, const Colouring& c,
                                    ImageCheckOptions options = {});

std::string format_code_report(const CodeReport& r);
std::string format_image_report(const ImageCheckReport& r);

}  // namespace egc
