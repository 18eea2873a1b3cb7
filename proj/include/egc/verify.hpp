#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "egc/amalgam.hpp"
#include "egc/colouring.hpp"

namespace egc {

// Strictly increasing vertex ids, at least two of them.
using CliqueCopy = std::vector<Vertex>;

enum class Property {
  odd,     // no even-chromatic copy ("h-odd")
  unique,  // every copy unique-chromatic ("h-unique")
};

struct Exhaustive {
  friend bool operator==(const Exhaustive&, const Exhaustive&) = default;
};
struct Sample {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  friend bool operator==(const Sample&, const Sample&) = default;
};
using ScanMode = std::variant<Exhaustive, Sample>;

// Exhaustive scans over more copies than this need ScanOptions::force.
inline constexpr std::uint64_t kExhaustiveCopyLimit = 1'000'000'000;

struct ScanOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  bool force = false;
};

struct ScanReport {
  Property property = Property::odd;
  std::size_t n = 0;
  std::size_t t = 0;
  ScanMode mode;
  // Exhaustive: lexicographic rank of the counterexample plus one, or C(n, t).
  // Sample: index of the failing draw plus one, or the sample count.
  std::uint64_t copies_checked = 0;
  std::optional<CliqueCopy> counterexample;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const { return !counterexample; }
};

bool is_even_chromatic(const Colouring& c, std::span<const Vertex> copy);
bool is_unique_chromatic(const Colouring& c, std::span<const Vertex> copy);

// Whether `copy` violates `property`.
bool violates(const Colouring& c, std::span<const Vertex> copy, Property property);

ScanReport scan(const Colouring& c, std::size_t t, Property property, ScanMode mode,
                ScanOptions options = {});

// Minimum number of distinct colours inside a copy of K_t.
std::size_t min_copy_colours(const Colouring& c, std::size_t t, ScanOptions options = {});

/// Four grid vertices (v, u1), (v, u2), (v', u1), (v', u2) of an amalgamation.
struct RectangleWitness {
  Vertex column = 0;        // v
  Vertex other_column = 0;  // v'
  Vertex row_low = 0;       // u1
  Vertex row_high = 0;      // u2

  std::array<Vertex, 4> vertices(const AmalgamColouring& a) const;
  friend bool operator==(const RectangleWitness&, const RectangleWitness&) = default;
};

// First rectangle contained in `copy`, scanning same-column pairs in
// lexicographic order. Throws ContractViolation if `copy` holds none.
RectangleWitness diagnose_rectangle(const AmalgamColouring& a, std::span<const Vertex> copy);

// Stable text form: one summary line, plus "counterexample: ..." on failure.
std::string format_report(const ScanReport& report);

const char* property_name(Property p);

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// 0-based position of `copy` among the t-subsets of {0..n-1} in lexicographic order.
std::uint64_t lex_rank(std::size_t n, std::span<const Vertex> copy);

// The t-subset drawn for sample `index` under `seed` (sorted).
CliqueCopy sample_copy(std::size_t n, std::size_t t, std::uint64_t seed, std::uint64_t index);

// Throws InvalidArgument unless copy is strictly increasing, has >= 2 entries
// and all ids are below n.
void check_copy(std::size_t n, std::span<const Vertex> copy);

}  // namespace egc
