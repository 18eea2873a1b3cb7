#include "egc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "egc/detail/copy_engine.hpp"
#include "egc/errors.hpp"

namespace egc {

namespace {

__extension__ using u128 = unsigned __int128;

// Colour multiset of the edges inside one copy, sorted.
class CopyColours {
 public:
  void load(const Colouring& c, std::span<const Vertex> copy) {
    buf_.clear();
    for (std::size_t i = 0; i < copy.size(); ++i)
      for (std::size_t j = i + 1; j < copy.size(); ++j) buf_.push_back(c(copy[i], copy[j]));
    std::sort(buf_.begin(), buf_.end());
  }

  template <class F>
  void for_each_run(F&& f) const {
    for (std::size_t i = 0; i < buf_.size();) {
      std::size_t j = i + 1;
      while (j < buf_.size() && buf_[j] == buf_[i]) ++j;
      f(j - i);
      i = j;
    }
  }

  bool all_even() const {
    bool even = true;
    for_each_run([&](std::size_t len) { even = even && len % 2 == 0; });
    return even;
  }
  bool has_singleton() const {
    bool single = false;
    for_each_run([&](std::size_t len) { single = single || len == 1; });
    return single;
  }
  std::size_t distinct() const {
    std::size_t d = 0;
    for_each_run([&](std::size_t) { ++d; });
    return d;
  }

 private:
  std::vector<ColourId> buf_;
};

bool violates_unchecked(const Colouring& c, std::span<const Vertex> copy, Property property,
                        CopyColours& scratch) {
  scratch.load(c, copy);
  return property == Property::odd ? scratch.all_even() : !scratch.has_singleton();
}

void check_t(const Colouring& c, std::size_t t) {
  if (t < 2 || t > c.vertices())
    throw InvalidArgument("clique size " + std::to_string(t) + " outside [2, " +
                          std::to_string(c.vertices()) + "]");
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, bound), bound > 0 (multiply-shift with rejection).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const u128 prod = static_cast<u128>(next()) * bound;
      if (static_cast<std::uint64_t>(prod) >= threshold)
        return static_cast<std::uint64_t>(prod >> 64);
    }
  }

 private:
  std::uint64_t state_;
};

ScanReport scan_exhaustive(const Colouring& c, std::size_t t, Property property,
                           const ScanOptions& options) {
  const std::uint64_t total = binomial(c.vertices(), t);
  if (total > kExhaustiveCopyLimit && !options.force)
    throw CapacityError("exhaustive scan over " + std::to_string(total) +
                        " copies exceeds the limit; use sampling or force");
  ScanReport report{property, c.vertices(), t, Exhaustive{}, total, std::nullopt, {}};
  auto hit = detail::first_hit(c.vertices(), t, options.threads, [&] {
    return [&c, property, scratch = CopyColours{}](std::span<const Vertex> copy) mutable {
      return violates_unchecked(c, copy, property, scratch);
    };
  });
  if (hit) {
    report.copies_checked = lex_rank(c.vertices(), hit->copy) + 1;
    report.counterexample = std::move(hit->copy);
  }
  return report;
}

ScanReport scan_sample(const Colouring& c, std::size_t t, Property property, const Sample& s,
                       const ScanOptions& options) {
  constexpr std::uint64_t chunk = 4096;
  constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> cursor{0};
  std::atomic<std::uint64_t> best{none};

  auto worker = [&] {
    CopyColours scratch;
    for (;;) {
      const std::uint64_t begin = cursor.fetch_add(chunk);
      if (begin >= s.count || begin > best.load()) return;
      const std::uint64_t end = std::min(s.count, begin + chunk);
      for (std::uint64_t i = begin; i < end; ++i) {
        const CliqueCopy copy = sample_copy(c.vertices(), t, s.seed, i);
        if (violates_unchecked(c, copy, property, scratch)) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
  };

  const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(
      detail::resolve_threads(options.threads), std::max<std::uint64_t>(1, s.count / chunk + 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ScanReport report{property, c.vertices(), t, s, s.count, std::nullopt, {}};
  if (const std::uint64_t i = best.load(); i != none) {
    report.copies_checked = i + 1;
    report.counterexample = sample_copy(c.vertices(), t, s.seed, i);
  }
  return report;
}

}  // namespace

void check_copy(std::size_t n, std::span<const Vertex> copy) {
  if (copy.size() < 2) throw InvalidArgument("a clique copy needs at least two vertices");
  for (std::size_t i = 0; i < copy.size(); ++i) {
    if (copy[i] >= n) throw InvalidArgument("copy vertex out of range");
    if (i > 0 && copy[i] <= copy[i - 1])
      throw InvalidArgument("copy vertices must be strictly increasing");
  }
}

bool is_even_chromatic(const Colouring& c, std::span<const Vertex> copy) {
  check_copy(c.vertices(), copy);
  CopyColours scratch;
  scratch.load(c, copy);
  return scratch.all_even();
}

bool is_unique_chromatic(const Colouring& c, std::span<const Vertex> copy) {
  check_copy(c.vertices(), copy);
  CopyColours scratch;
  scratch.load(c, copy);
  return scratch.has_singleton();
}

bool violates(const Colouring& c, std::span<const Vertex> copy, Property property) {
  return property == Property::odd ? is_even_chromatic(c, copy) : !is_unique_chromatic(c, copy);
}

ScanReport scan(const Colouring& c, std::size_t t, Property property, ScanMode mode,
                ScanOptions options) {
  check_t(c, t);
  const auto start = std::chrono::steady_clock::now();
  ScanReport report = std::holds_alternative<Sample>(mode)
                          ? scan_sample(c, t, property, std::get<Sample>(mode), options)
                          : scan_exhaustive(c, t, property, options);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::size_t min_copy_colours(const Colouring& c, std::size_t t, ScanOptions options) {
  check_t(c, t);
  const std::uint64_t total = binomial(c.vertices(), t);
  if (total > kExhaustiveCopyLimit && !options.force)
    throw CapacityError("min_copy_colours over " + std::to_string(total) + " copies exceeds the limit");

  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  detail::for_each_unit(
      c.vertices(), options.threads,
      [&] {
        return [&, scratch = CopyColours{}, copy = std::vector<Vertex>{}](
                   std::uint64_t, Vertex a, Vertex b) mutable {
          std::size_t local = best.load();
          detail::visit_unit(c.vertices(), t, a, b, copy, [&](std::span<const Vertex> s) {
            scratch.load(c, s);
            local = std::min(local, scratch.distinct());
            return local == 1;
          });
          std::size_t cur = best.load();
          while (local < cur && !best.compare_exchange_weak(cur, local)) {
          }
        };
      },
      [&](std::uint64_t) { return best.load() == 1; });
  return best.load();
}

std::array<Vertex, 4> RectangleWitness::vertices(const AmalgamColouring& a) const {
  return {a.vertex({column, row_low}), a.vertex({column, row_high}),
          a.vertex({other_column, row_low}), a.vertex({other_column, row_high})};
}

RectangleWitness diagnose_rectangle(const AmalgamColouring& a, std::span<const Vertex> copy) {
  check_copy(a.colouring.vertices(), copy);
  auto contains = [&](GridPoint p) {
    return std::binary_search(copy.begin(), copy.end(), a.vertex(p));
  };
  for (std::size_t i = 0; i < copy.size(); ++i) {
    const GridPoint p = a.point(copy[i]);
    for (std::size_t j = i + 1; j < copy.size(); ++j) {
      const GridPoint q = a.point(copy[j]);
      if (q.column != p.column) break;  // sorted ids keep a column contiguous
      for (Vertex x : copy) {
        const Vertex other = a.point(x).column;
        if (other == p.column) continue;
        if (contains({other, p.row}) && contains({other, q.row}))
          return {p.column, other, p.row, q.row};
      }
    }
  }
  throw ContractViolation("copy contains no rectangle in the amalgamation grid");
}

const char* property_name(Property p) { return p == Property::odd ? "h-odd" : "h-unique"; }

std::string format_report(const ScanReport& r) {
  std::ostringstream out;
  out << "scan property=" << property_name(r.property) << " n=" << r.n << " t=" << r.t;
  if (const auto* s = std::get_if<Sample>(&r.mode))
    out << " mode=sample count=" << s->count << " seed=" << s->seed;
  else
    out << " mode=exhaustive";
  out << " copies=" << r.copies_checked << " result=" << (r.passed() ? "pass" : "fail") << '\n';
  if (r.counterexample) {
    out << "counterexample:";
    for (Vertex v : *r.counterexample) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t lex_rank(std::size_t n, std::span<const Vertex> copy) {
  const std::size_t t = copy.size();
  std::uint64_t rank = 0;
  std::uint64_t lo = 0;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::uint64_t x = lo; x < copy[i]; ++x) rank += binomial(n - 1 - x, t - 1 - i);
    lo = copy[i] + 1;
  }
  return rank;
}

CliqueCopy sample_copy(std::size_t n, std::size_t t, std::uint64_t seed, std::uint64_t index) {
  // Draw i reads the SplitMix64 stream starting 2^32 steps after draw i-1.
  SplitMix64 rng(seed + index * (0x9E3779B97F4A7C15ULL << 32));
  // Floyd's subset sampling.
  CliqueCopy out;
  out.reserve(t);
  for (std::uint64_t j = n - t; j < n; ++j) {
    const auto r = static_cast<Vertex>(rng.below(j + 1));
    if (std::find(out.begin(), out.end(), r) == out.end())
      out.push_back(r);
    else
      out.push_back(static_cast<Vertex>(j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace egc
