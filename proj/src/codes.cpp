#include "egc/codes.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>

#include "egc/detail/copy_engine.hpp"
#include "egc/errors.hpp"

namespace egc {

bool BitVector::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::size_t BitVector::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return i * 64 + std::countr_zero(words_[i]);
  return bits_;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.bits_ != bits_) throw InvalidArgument("bit vector lengths differ");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

ParityCheckMatrix parity_matrix(const Colouring& c) {
  const Colouring canon = c.is_canonical() ? c : canonicalize(c);
  ParityCheckMatrix mx{canon.vertices(), std::vector<BitVector>(canon.palette_size(),
                                                                BitVector(canon.edges()))};
  for (EdgeIndex e = 0; e < canon.edges(); ++e) mx.rows[canon.at_edge(e)].set(e);
  return mx;
}

std::size_t gf2_rank(std::span<const BitVector> rows) {
  // Each basis vector is zero at the pivots of the vectors inserted before it,
  // so one pass in insertion order clears every pivot of a new row.
  std::vector<BitVector> basis;
  std::vector<std::size_t> pivots;
  for (const BitVector& row : rows) {
    BitVector r = row;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (r.test(pivots[i])) r ^= basis[i];
    const std::size_t p = r.first();
    if (p == r.size()) continue;
    basis.push_back(std::move(r));
    pivots.push_back(p);
  }
  return basis.size();
}

CodeReport code_report(const ParityCheckMatrix& mx) {
  CodeReport r;
  r.n = mx.n;
  r.k = mx.k();
  r.rank = gf2_rank(mx.rows);
  r.dimension = mx.columns() - r.rank;
  r.density_log2 = -static_cast<std::int64_t>(r.rank);
  return r;
}

namespace {

// Colour class of each column, read back from the matrix rows.
std::vector<ColourId> column_rows(const ParityCheckMatrix& mx) {
  std::vector<ColourId> col(mx.columns(), 0);
  for (std::size_t r = 0; r < mx.rows.size(); ++r)
    for (EdgeIndex e = 0; e < mx.columns(); ++e)
      if (mx.rows[r].test(e)) col[e] = static_cast<ColourId>(r);
  return col;
}

// Accumulates a parity vector by toggling rows; remembers what it touched so
// it can be cleared in time proportional to the image size.
class ParityScratch {
 public:
  ParityScratch(const ParityCheckMatrix& mx, const std::vector<ColourId>& col)
      : n_(mx.n), col_(&col), parity_(mx.k(), 0) {}

  // True when the image of h under placement has zero parity vector.
  bool zero_image(const GraphSpec& h, std::span<const Vertex> placement) {
    for (auto [a, b] : h.edges()) toggle(placement[a], placement[b]);
    return settle();
  }

  bool zero_clique(std::span<const Vertex> copy) {
    for (std::size_t i = 0; i < copy.size(); ++i)
      for (std::size_t j = i + 1; j < copy.size(); ++j) toggle(copy[i], copy[j]);
    return settle();
  }

 private:
  void toggle(Vertex x, Vertex y) {
    if (x > y) std::swap(x, y);
    const ColourId r = (*col_)[edge_index(n_, x, y)];
    parity_[r] ^= 1;
    touched_.push_back(r);
  }

  bool settle() {
    bool zero = true;
    for (ColourId r : touched_) {
      zero = zero && parity_[r] == 0;
      parity_[r] = 0;
    }
    touched_.clear();
    return zero;
  }

  std::size_t n_;
  const std::vector<ColourId>* col_;
  std::vector<std::uint8_t> parity_;
  std::vector<ColourId> touched_;
};

std::uint64_t factorial_saturating(std::uint64_t v) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= v; ++i) {
    if (f > std::numeric_limits<std::uint64_t>::max() / i) return std::numeric_limits<std::uint64_t>::max();
    f *= i;
  }
  return f;
}

}  // namespace

BitVector image_parity(const GraphSpec& h, std::span<const Vertex> placement,
                       const ParityCheckMatrix& mx) {
  if (placement.size() != h.vertices()) throw InvalidArgument("placement size differs from |V(H)|");
  std::vector<Vertex> sorted(placement.begin(), placement.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("placement is not injective");
  if (!sorted.empty() && sorted.back() >= mx.n) throw InvalidArgument("placement out of range");

  BitVector out(mx.k());
  for (auto [a, b] : h.edges()) {
    Vertex x = placement[a], y = placement[b];
    if (x > y) std::swap(x, y);
    const EdgeIndex e = edge_index(mx.n, x, y);
    for (std::size_t r = 0; r < mx.k(); ++r)
      if (mx.rows[r].test(e)) out.flip(r);
  }
  return out;
}

ImageCheckReport verify_code_avoids(const GraphSpec& h, const Colouring& c,
                                    ImageCheckOptions options) {
  const std::size_t n = c.vertices();
  const std::size_t v = h.vertices();
  ImageCheckReport report{n, v, 0, std::nullopt};
  if (v > n) return report;

  if (h.edges().empty()) {
    std::vector<Vertex> placement(v);
    std::iota(placement.begin(), placement.end(), Vertex{0});
    report.subsets_checked = 1;
    report.violation = std::move(placement);
    return report;
  }

  const bool clique = h.is_complete();
  const std::uint64_t subsets = binomial(n, v);
  const std::uint64_t per_subset = clique ? 1 : factorial_saturating(v);
  const bool overflow = per_subset != 0 && subsets > std::numeric_limits<std::uint64_t>::max() / per_subset;
  if ((overflow || subsets * per_subset > kPlacementLimit) && !options.force)
    throw CapacityError("image enumeration exceeds the placement limit; use force");

  const ParityCheckMatrix mx = parity_matrix(c);
  const std::vector<ColourId> col = column_rows(mx);
  report.subsets_checked = subsets;

  auto hit = detail::first_hit(n, v, options.threads, [&] {
    return [&, scratch = ParityScratch(mx, col), perm = std::vector<Vertex>{}](
               std::span<const Vertex> copy) mutable {
      if (clique) return scratch.zero_clique(copy);
      perm.assign(copy.begin(), copy.end());
      do {
        if (scratch.zero_image(h, perm)) return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return false;
    };
  });
  if (!hit) return report;

  report.subsets_checked = lex_rank(n, hit->copy) + 1;
  std::vector<Vertex> perm = hit->copy;
  if (!clique) {
    ParityScratch scratch(mx, col);
    while (!scratch.zero_image(h, perm)) std::next_permutation(perm.begin(), perm.end());
  }
  report.violation = std::move(perm);
  return report;
}

std::string format_code_report(const CodeReport& r) {
  std::ostringstream out;
  out << "n " << r.n << "\nk " << r.k << "\nrank " << r.rank << "\ndimension " << r.dimension
      << "\ndensity_log2 " << r.density_log2 << '\n';
  return out.str();
}

std::string format_image_report(const ImageCheckReport& r) {
  std::ostringstream out;
  out << "image-check n=" << r.n << " h_vertices=" << r.h_vertices
      << " subsets=" << r.subsets_checked << " result=" << (r.passed() ? "pass" : "fail") << '\n';
  if (r.violation) {
    out << "violation:";
    for (Vertex x : *r.violation) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

}  // namespace egc
