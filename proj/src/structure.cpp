#include "egc/structure.hpp"

#include <bit>
#include <string>
#include <unordered_map>

#include "egc/errors.hpp"

namespace egc {

namespace {

using Mask = std::uint32_t;

void check_size(const GraphSpec& h) {
  if (h.vertices() > kStructureMaxVertices)
    throw CapacityError("graph has " + std::to_string(h.vertices()) + " vertices; the limit is " +
                        std::to_string(kStructureMaxVertices));
}

void check_b2_precondition(const GraphSpec& h) {
  check_size(h);
  if (h.is_complete()) throw InvalidArgument("graph is complete");
  if (h.has_isolated_vertex()) throw InvalidArgument("graph has an isolated vertex");
}

std::size_t edges_in(const GraphSpec& h, Mask s) {
  std::size_t twice = 0;
  for (Mask rest = s; rest; rest &= rest - 1)
    twice += std::popcount(h.neighbours(std::countr_zero(rest)) & s);
  return twice / 2;
}

bool independent(const GraphSpec& h, Mask s) {
  for (Mask rest = s; rest; rest &= rest - 1)
    if (h.neighbours(std::countr_zero(rest)) & s) return false;
  return true;
}

VertexSet to_set(Mask s) {
  VertexSet out;
  for (; s; s &= s - 1) out.push_back(static_cast<Vertex>(std::countr_zero(s)));
  return out;
}

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex x : s) m |= Mask{1} << x;
  return m;
}

class ChainSearch {
 public:
  explicit ChainSearch(const GraphSpec& h) : h_(h) {}

  // Whether a chain exists from `s` (even edge count assumed) down to the empty set.
  bool solve(Mask s) {
    if (s == 0) return true;
    if (auto it = memo_.find(s); it != memo_.end()) return it->second != kDead;
    if (independent(h_, s)) {
      memo_[s] = 0;
      return true;
    }
    memo_[s] = kDead;
    // Branch on independent subsets of s, grown from the lowest vertex upward.
    bool found = false;
    grow(s, s, 0, found);
    return found;
  }

  Mask next(Mask s) const { return memo_.at(s); }

 private:
  static constexpr Mask kDead = ~Mask{0};

  void grow(Mask s, Mask candidates, Mask chosen, bool& found) {
    if (found) return;
    if (chosen != 0) {
      const Mask rest = s & ~chosen;
      if (edges_in(h_, rest) % 2 == 0 && solve(rest)) {
        memo_[s] = rest;
        found = true;
        return;
      }
    }
    for (Mask c = candidates; c && !found; c &= c - 1) {
      const auto x = static_cast<Vertex>(std::countr_zero(c));
      const Mask later = c & ~((Mask{1} << (x + 1)) - 1);
      grow(s, later & ~static_cast<Mask>(h_.neighbours(x)), chosen | (Mask{1} << x), found);
    }
  }

  const GraphSpec& h_;
  std::unordered_map<Mask, Mask> memo_;
};

}  // namespace

std::optional<DecompositionChain> is_even_decomposable(const GraphSpec& h) {
  check_size(h);
  if (h.edges().size() % 2 != 0) return std::nullopt;
  const Mask all = h.vertices() == 32 ? ~Mask{0} : (Mask{1} << h.vertices()) - 1;
  ChainSearch search(h);
  if (!search.solve(all)) return std::nullopt;
  DecompositionChain out;
  for (Mask s = all;; s = search.next(s)) {
    out.chain.push_back(to_set(s));
    if (s == 0) break;
  }
  return out;
}

bool is_valid_chain(const GraphSpec& h, const DecompositionChain& d) {
  const auto& chain = d.chain;
  if (chain.empty() || !chain.back().empty()) return false;
  if (chain.front().size() != h.vertices()) return false;
  for (std::size_t i = 0; i < chain.front().size(); ++i)
    if (chain.front()[i] != i) return false;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const Mask cur = to_mask(chain[i]);
    const Mask nxt = to_mask(chain[i + 1]);
    if ((nxt & ~cur) != 0 || nxt == cur) return false;
    if (edges_in(h, cur) % 2 != 0) return false;
    if (!independent(h, cur & ~nxt)) return false;
  }
  return true;
}

bool satisfies_b2(const GraphSpec& h, const VertexSet& set) {
  const Mask in = to_mask(set);
  if (!independent(h, in)) return false;
  std::size_t cross = 0;
  for (Vertex x : set) cross += h.degree(x);
  if (cross < 2) return false;

  const Mask all = (Mask{1} << h.vertices()) - 1;
  const Mask rest = all & ~in;
  Mask kept = 0;
  for (Mask r = rest; r; r &= r - 1) {
    const auto x = std::countr_zero(r);
    if (h.neighbours(x) & rest) kept |= Mask{1} << x;
  }
  if (kept == 0) return true;
  // Non-complete: some pair inside `kept` is not adjacent.
  for (Mask r = kept; r; r &= r - 1) {
    const auto x = std::countr_zero(r);
    if ((h.neighbours(x) & kept) != (kept & ~(Mask{1} << x))) return true;
  }
  return false;
}

VertexSet find_independent_set_b2(const GraphSpec& h) {
  check_b2_precondition(h);
  const std::size_t v = h.vertices();
  for (std::size_t size = 1; size <= v; ++size) {
    // Lexicographic size-subsets.
    VertexSet s(size);
    for (std::size_t i = 0; i < size; ++i) s[i] = static_cast<Vertex>(i);
    for (;;) {
      if (satisfies_b2(h, s)) return s;
      std::size_t i = size;
      while (i > 0 && s[i - 1] == v - size + i - 1) --i;
      if (i == 0) break;
      ++s[i - 1];
      for (std::size_t j = i; j < size; ++j) s[j] = s[j - 1] + 1;
    }
  }
  throw ContractViolation("no independent set meets both conditions");
}

Rational unique_lower_bound_exponent(const GraphSpec& h) {
  if (h.is_complete()) throw InvalidArgument("graph is complete");
  if (h.has_isolated_vertex()) throw InvalidArgument("graph has an isolated vertex");
  return {1, h.vertices() - 1};
}

}  // namespace egc
