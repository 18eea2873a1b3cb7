#include "egc/amalgam.hpp"

#include <string>
#include <unordered_map>

#include "egc/errors.hpp"

namespace egc {

namespace {

// Dense interning is used while the key space stays below this many slots.
constexpr std::uint64_t kDenseKeyLimit = std::uint64_t{1} << 24;

class Interner {
 public:
  explicit Interner(std::uint64_t key_space) : dense_(key_space <= kDenseKeyLimit) {
    if (dense_) table_.assign(key_space, kUnset);
  }

  // Returns the id of `key`, assigning the next id on first sight.
  std::pair<ColourId, bool> intern(std::uint64_t key) {
    if (dense_) {
      ColourId& slot = table_[key];
      if (slot != kUnset) return {slot, false};
      slot = next_++;
      return {slot, true};
    }
    auto [it, inserted] = map_.try_emplace(key, next_);
    if (inserted) ++next_;
    return {it->second, inserted};
  }

  ColourId size() const { return next_; }

 private:
  static constexpr ColourId kUnset = ~ColourId{0};
  bool dense_;
  ColourId next_ = 0;
  std::vector<ColourId> table_;
  std::unordered_map<std::uint64_t, ColourId> map_;
};

}  // namespace

AmalgamColouring amalgamate(const Colouring& c, const Colouring& d, AmalgamOptions options) {
  const std::uint64_t n = c.vertices();
  const std::uint64_t m = d.vertices();
  if (n * m > options.max_vertices)
    throw CapacityError("amalgamation on " + std::to_string(n * m) +
                        " vertices exceeds the materialization cap of " +
                        std::to_string(options.max_vertices));

  const std::uint64_t kc = c.palette_size();
  const std::uint64_t kd = d.palette_size();
  // Key layout: [+ : kc*kd][- : kc*kd][0 : kc][inf : C(m,2)].
  const std::uint64_t minus_base = kc * kd;
  const std::uint64_t zero_base = 2 * kc * kd;
  const std::uint64_t inf_base = zero_base + kc;
  Interner interner(inf_base + edge_count(m));

  const std::uint64_t size = n * m;
  std::vector<ColourId> colours(edge_count(size));
  AmalgamMeta meta{n, m, {}};

  EdgeIndex e = 0;
  for (std::uint64_t x = 0; x < size; ++x) {
    const auto v1 = static_cast<Vertex>(x / m);
    const auto u1 = static_cast<Vertex>(x % m);
    for (std::uint64_t y = x + 1; y < size; ++y, ++e) {
      const auto v2 = static_cast<Vertex>(y / m);
      const auto u2 = static_cast<Vertex>(y % m);
      // Row-major ids guarantee v1 <= v2.
      AmalgamTuple tuple;
      std::uint64_t key;
      if (v1 == v2) {
        tuple = {std::nullopt, d(u1, u2), Slope::infinity, std::pair{u1, u2}};
        key = inf_base + edge_index(m, u1, u2);
      } else if (u1 == u2) {
        const ColourId a = c(v1, v2);
        tuple = {a, std::nullopt, Slope::zero, std::nullopt};
        key = zero_base + a;
      } else {
        const ColourId a = c(v1, v2);
        const ColourId b = d(u1, u2);
        const bool rising = u1 < u2;
        tuple = {a, b, rising ? Slope::plus : Slope::minus, std::nullopt};
        key = (rising ? 0 : minus_base) + a * kd + b;
      }
      auto [id, fresh] = interner.intern(key);
      if (fresh) meta.tuples.push_back(tuple);
      colours[e] = id;
    }
  }
  return {Colouring(size, interner.size(), std::move(colours)), std::move(meta)};
}

Colouring weaken(const Colouring& c, std::span<const ColourId> map) {
  std::vector<std::uint64_t> keys(c.edges());
  for (EdgeIndex e = 0; e < c.edges(); ++e) {
    const ColourId x = c.at_edge(e);
    if (x >= map.size())
      throw InvalidArgument("weaken: colour " + std::to_string(x) + " has no image");
    keys[e] = map[x];
  }
  return from_keys(c.vertices(), keys);
}

Colouring component(const AmalgamColouring& a, int index) {
  if (index < 1 || index > 4) throw InvalidArgument("component index must be 1..4");
  // Images of `*` sit above every palette id.
  constexpr ColourId star = ~ColourId{0};
  const auto m = static_cast<std::uint64_t>(a.meta.right_size);
  std::vector<ColourId> map;
  map.reserve(a.meta.tuples.size());
  for (const AmalgamTuple& t : a.meta.tuples) {
    switch (index) {
      case 1: map.push_back(t.horizontal.value_or(star)); break;
      case 2: map.push_back(t.vertical.value_or(star)); break;
      case 3: map.push_back(static_cast<ColourId>(t.slope)); break;
      case 4:
        map.push_back(t.rows ? static_cast<ColourId>(edge_index(m, t.rows->first, t.rows->second))
                             : star);
        break;
    }
  }
  return weaken(a.colouring, map);
}

Colouring product(const Colouring& c1, const Colouring& c2) {
  if (c1.vertices() != c2.vertices()) throw InvalidArgument("product: vertex counts differ");
  std::vector<std::uint64_t> keys(c1.edges());
  for (EdgeIndex e = 0; e < c1.edges(); ++e)
    keys[e] = (std::uint64_t{c1.at_edge(e)} << 32) | c2.at_edge(e);
  return from_keys(c1.vertices(), keys);
}

const char* slope_symbol(Slope s) {
  switch (s) {
    case Slope::plus: return "+";
    case Slope::minus: return "-";
    case Slope::zero: return "0";
    case Slope::infinity: return "inf";
  }
  return "?";
}

}  // namespace egc
