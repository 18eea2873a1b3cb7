#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "egc/amalgam.hpp"
#include "egc/colouring.hpp"
#include "egc/verify.hpp"

namespace egc {

using BigInt = boost::multiprecision::cpp_int;

/// A rational schedule exponent p in (0, 1].
struct Exponent {
  unsigned num = 1;
  unsigned den = 2;
  double value() const { return static_cast<double>(num) / den; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

inline constexpr Exponent kHalf{1, 2};
inline constexpr Exponent kTwoThirds{2, 3};

// floor(exp(log(n)^p)), evaluated with enough precision to be exact.
std::uint64_t schedule_factor(std::uint64_t n, Exponent p);
BigInt schedule_factor(const BigInt& n, Exponent p);

struct ScheduleStep {
  std::uint64_t size;    // n_k
  std::uint64_t factor;  // m_k
  friend bool operator==(const ScheduleStep&, const ScheduleStep&) = default;
};

struct BuildSchedule {
  Exponent p;
  std::uint64_t base = 2;
  std::uint64_t target = 2;
  std::vector<ScheduleStep> steps;

  std::uint64_t final_size() const {
    return steps.empty() ? base : steps.back().size * steps.back().factor;
  }
};

// n_0 = base, n_{k+1} = n_k * floor(e^{(log n_k)^p}), until n_K >= target.
BuildSchedule schedule(std::uint64_t target, Exponent p, std::uint64_t base = 2);

// Same shape with explicit factors m_0, m_1, ...; stops once the target is reached.
BuildSchedule schedule_with_factors(std::uint64_t target, std::uint64_t base,
                                    std::span<const std::uint64_t> factors);

enum class Builder { k4_unique, k5_unique, k8_odd };

struct BuildOptions {
  std::uint64_t base = 2;
  std::vector<std::uint64_t> factors;  // overrides the computed m_k when non-empty
  std::size_t max_vertices = kDefaultMaxVertices;
};

// K4-unique colouring of K_target.
Colouring build_k4_unique(std::size_t target, const BuildOptions& options = {});
// K3-unique and K5-unique colouring of K_target.
Colouring build_k5_unique(std::size_t target, const BuildOptions& options = {});
// K4-unique and K8-odd colouring of K_target.
Colouring build_k8_odd(std::size_t target, const BuildOptions& options = {});

Colouring build(Builder b, std::size_t target, const BuildOptions& options = {});
BuildSchedule build_schedule(Builder b, std::size_t target, const BuildOptions& options = {});

Exponent builder_exponent(Builder b);

struct Claim {
  Property property;
  std::size_t t;
};
// The clique properties a builder's output is guaranteed to have.
std::vector<Claim> builder_claims(Builder b);

const char* builder_name(Builder b);

struct GrowthRow {
  BigInt size;     // n_k
  BigInt colours;  // colour count from the amalgamation recursion
  double ratio;    // log(colours) / log(n_k)^p
};

// Rows 0..steps of the colour-count recursion, with no materialization.
std::vector<GrowthRow> growth_report(Builder b, std::size_t steps, std::uint64_t base = 2);

// Colours of the k4 recursion at its first schedule point >= m.
BigInt k4_recursion_colours(const BigInt& m, std::uint64_t base = 2);

std::string format_growth(std::span<const GrowthRow> rows, bool csv);

}  // namespace egc
