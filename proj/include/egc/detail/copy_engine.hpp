#pragma once

// Parallel enumeration of t-subsets of {0..n-1} in lexicographic order.
//
// Work is split into units, one per leading pair (a, b); unit indices follow
// the lexicographic edge order, so the lexicographic order of copies is unit
// order followed by the order inside a unit. Units are claimed from a shared
// cursor; results are reduced by unit index, which makes every reduction
// independent of the worker count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "egc/colouring.hpp"

namespace egc::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Advances `rest` (strictly increasing, values below n) to the next
// combination; returns false after the last one.
inline bool next_combination(std::span<Vertex> rest, std::size_t n) {
  const std::size_t r = rest.size();
  std::size_t i = r;
  while (i > 0) {
    --i;
    if (rest[i] < n - r + i) {
      ++rest[i];
      for (std::size_t j = i + 1; j < r; ++j) rest[j] = rest[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Calls body(unit, a, b) for every leading pair, from `threads` workers.
// A worker stops claiming units once stop(unit) returns true.
template <class Body, class Stop>
void for_each_unit(std::size_t n, unsigned threads, Body&& make_body, Stop&& stop) {
  const std::uint64_t units = edge_count(n);
  if (units == 0) return;
  std::vector<std::uint64_t> row_start(n);
  for (std::size_t a = 0; a + 1 < n; ++a) row_start[a] = edge_index(n, a, a + 1);

  std::atomic<std::uint64_t> cursor{0};
  auto worker = [&] {
    auto body = make_body();
    for (;;) {
      const std::uint64_t unit = cursor.fetch_add(1, std::memory_order_relaxed);
      if (unit >= units || stop(unit)) return;
      const auto it = std::upper_bound(row_start.begin(), row_start.begin() + (n - 1), unit);
      const auto a = static_cast<Vertex>(it - row_start.begin() - 1);
      const auto b = static_cast<Vertex>(a + 1 + (unit - row_start[a]));
      body(unit, a, b);
    }
  };

  threads = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), units));
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

// Visits the copies of one unit in lexicographic order until visit returns true.
// Returns the copy that stopped the visit, if any.
template <class Visit>
std::optional<std::vector<Vertex>> visit_unit(std::size_t n, std::size_t t, Vertex a, Vertex b,
                                              std::vector<Vertex>& copy, Visit&& visit) {
  copy.resize(t);
  copy[0] = a;
  copy[1] = b;
  const std::size_t r = t - 2;
  if (n - b - 1 < r) return std::nullopt;
  for (std::size_t j = 0; j < r; ++j) copy[2 + j] = static_cast<Vertex>(b + 1 + j);
  std::span<Vertex> rest(copy.data() + 2, r);
  do {
    if (visit(std::span<const Vertex>(copy))) return copy;
  } while (next_combination(rest, n));
  return std::nullopt;
}

struct FirstHit {
  std::uint64_t unit;
  std::vector<Vertex> copy;
};

// Lexicographically first copy for which the worker predicate returns true.
// make_predicate() is called once per worker and must return a callable
// bool(std::span<const Vertex>).
template <class MakePredicate>
std::optional<FirstHit> first_hit(std::size_t n, std::size_t t, unsigned threads,
                                  MakePredicate&& make_predicate) {
  constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{none};
  std::vector<FirstHit> hits;
  std::mutex hits_lock;

  for_each_unit(
      n, threads,
      [&] {
        return [&, pred = make_predicate(), copy = std::vector<Vertex>{}](
                   std::uint64_t unit, Vertex a, Vertex b) mutable {
          auto hit = visit_unit(n, t, a, b, copy, pred);
          if (!hit) return;
          std::uint64_t cur = best.load();
          while (unit < cur && !best.compare_exchange_weak(cur, unit)) {
          }
          std::lock_guard lock(hits_lock);
          hits.push_back({unit, std::move(*hit)});
        };
      },
      [&](std::uint64_t unit) { return unit > best.load(std::memory_order_relaxed); });

  if (hits.empty()) return std::nullopt;
  return *std::min_element(hits.begin(), hits.end(),
                           [](const FirstHit& x, const FirstHit& y) { return x.unit < y.unit; });
}

}  // namespace egc::detail
