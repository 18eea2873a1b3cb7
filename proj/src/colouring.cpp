#include "egc/colouring.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "egc/errors.hpp"

namespace egc {

Colouring::Colouring(std::size_t n, std::size_t k, std::vector<ColourId> colours)
    : n_(n), k_(k), colours_(std::move(colours)) {
  if (n_ == 0) throw InvalidArgument("colouring needs at least one vertex");
  if (colours_.size() != edge_count(n_))
    throw InvalidArgument("expected " + std::to_string(edge_count(n_)) + " edge colours, got " +
                          std::to_string(colours_.size()));
  for (ColourId x : colours_)
    if (x >= k_) throw InvalidArgument("colour id " + std::to_string(x) + " outside palette");
}

bool Colouring::is_canonical() const {
  ColourId next = 0;
  for (ColourId x : colours_) {
    if (x > next) return false;
    if (x == next) ++next;
  }
  return next == k_;
}

Colouring rainbow(std::size_t n) {
  if (n == 0) throw InvalidArgument("rainbow: n must be positive");
  std::vector<ColourId> colours(edge_count(n));
  for (std::size_t e = 0; e < colours.size(); ++e) colours[e] = static_cast<ColourId>(e);
  const std::size_t k = colours.size();
  return Colouring(n, k, std::move(colours));
}

Colouring trivial(std::size_t n) {
  if (n == 0) throw InvalidArgument("trivial: n must be positive");
  return Colouring(n, n >= 2 ? 1 : 0, std::vector<ColourId>(edge_count(n), 0));
}

Colouring canonicalize(const Colouring& c) {
  constexpr ColourId unset = ~ColourId{0};
  std::vector<ColourId> relabel(c.palette_size(), unset);
  std::vector<ColourId> out(c.edges());
  ColourId next = 0;
  for (EdgeIndex e = 0; e < c.edges(); ++e) {
    ColourId& r = relabel[c.at_edge(e)];
    if (r == unset) r = next++;
    out[e] = r;
  }
  return Colouring(c.vertices(), next, std::move(out));
}

Colouring restrict(const Colouring& c, std::span<const Vertex> subset) {
  if (subset.empty()) throw InvalidArgument("restrict: empty vertex subset");
  std::vector<Vertex> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw InvalidArgument("restrict: repeated vertex");
  if (s.back() >= c.vertices()) throw InvalidArgument("restrict: vertex out of range");

  std::vector<ColourId> out;
  out.reserve(edge_count(s.size()));
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) out.push_back(c(s[a], s[b]));
  return canonicalize(Colouring(s.size(), c.palette_size(), std::move(out)));
}

Colouring restrict_prefix(const Colouring& c, std::size_t count) {
  if (count == 0 || count > c.vertices()) throw InvalidArgument("restrict_prefix: bad size");
  std::vector<Vertex> s(count);
  for (std::size_t i = 0; i < count; ++i) s[i] = static_cast<Vertex>(i);
  return restrict(c, s);
}

std::size_t colour_count(const Colouring& c) {
  std::vector<bool> seen(c.palette_size(), false);
  std::size_t count = 0;
  for (ColourId x : c.colours())
    if (!seen[x]) {
      seen[x] = true;
      ++count;
    }
  return count;
}

Colouring from_keys(std::size_t n, std::span<const std::uint64_t> keys) {
  if (keys.size() != edge_count(n)) throw InvalidArgument("from_keys: wrong key count");
  std::unordered_map<std::uint64_t, ColourId> ids;
  std::vector<ColourId> out(keys.size());
  for (std::size_t e = 0; e < keys.size(); ++e) {
    auto [it, inserted] = ids.try_emplace(keys[e], static_cast<ColourId>(ids.size()));
    out[e] = it->second;
  }
  return Colouring(n, ids.size(), std::move(out));
}

}  // namespace egc
