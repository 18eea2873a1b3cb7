#include "egc/build.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "egc/errors.hpp"

namespace egc {

namespace mp = boost::multiprecision;

namespace {

template <unsigned Digits>
using Float = mp::number<mp::cpp_bin_float<Digits>>;

// floor(exp(log(n)^p)); `ambiguous` is set when the value lies within 1e-9 of
// an integer, where more digits are needed to trust the floor.
template <unsigned Digits>
BigInt factor_at(const BigInt& n, Exponent p, bool& ambiguous) {
  using F = Float<Digits>;
  const F exponent = F(p.num) / F(p.den);
  const F x = mp::exp(mp::pow(mp::log(F(n)), exponent));
  const F lower = mp::floor(x);
  const F tol("1e-9");
  ambiguous = (x - lower) < tol || (lower + 1 - x) < tol;
  return lower.template convert_to<BigInt>();
}

void check_exponent(Exponent p) {
  if (p.num == 0 || p.den == 0 || p.num > p.den)
    throw InvalidArgument("schedule exponent must lie in (0, 1]");
}

std::uint64_t checked_u64(const BigInt& x) {
  if (x > std::numeric_limits<std::uint64_t>::max()) throw CapacityError("value exceeds 64 bits");
  return x.convert_to<std::uint64_t>();
}

// Guards n * m against 64-bit overflow inside schedules.
constexpr std::uint64_t kMaxTarget = std::uint64_t{1} << 32;

double ratio_of(const BigInt& colours, const BigInt& size, Exponent p) {
  using F = Float<50>;
  if (colours <= 1) return 0.0;
  const F num = mp::log(F(colours));
  const F den = mp::pow(mp::log(F(size)), F(p.num) / F(p.den));
  return static_cast<double>(num / den);
}

Colouring run_schedule(const BuildSchedule& s, std::size_t target, std::size_t max_vertices,
                       auto&& auxiliary) {
  if (s.final_size() > max_vertices)
    throw CapacityError("schedule reaches " + std::to_string(s.final_size()) +
                        " vertices, above the materialization cap of " +
                        std::to_string(max_vertices));
  Colouring c = rainbow(s.base);
  for (const ScheduleStep& step : s.steps)
    c = amalgamate(c, auxiliary(step.factor), {max_vertices}).colouring;
  return c.vertices() == target ? c : restrict_prefix(c, target);
}

void check_target(std::size_t target) {
  if (target == 0) throw InvalidArgument("target must be at least 1");
}

}  // namespace

BigInt schedule_factor(const BigInt& n, Exponent p) {
  check_exponent(p);
  if (n < 2) throw InvalidArgument("schedule factor needs n >= 2");
  bool ambiguous = false;
  BigInt m = factor_at<50>(n, p, ambiguous);
  if (ambiguous) m = factor_at<200>(n, p, ambiguous);
  return m;
}

std::uint64_t schedule_factor(std::uint64_t n, Exponent p) {
  return checked_u64(schedule_factor(BigInt(n), p));
}

BuildSchedule schedule(std::uint64_t target, Exponent p, std::uint64_t base) {
  check_exponent(p);
  if (base < 2) throw InvalidArgument("base size must be at least 2");
  if (target > kMaxTarget) throw CapacityError("schedule target too large");
  BuildSchedule s{p, base, target, {}};
  for (std::uint64_t n = base; n < target;) {
    const std::uint64_t m = schedule_factor(n, p);
    s.steps.push_back({n, m});
    n *= m;
  }
  return s;
}

BuildSchedule schedule_with_factors(std::uint64_t target, std::uint64_t base,
                                    std::span<const std::uint64_t> factors) {
  if (base < 1) throw InvalidArgument("base size must be positive");
  if (target > kMaxTarget) throw CapacityError("schedule target too large");
  BuildSchedule s{kHalf, base, target, {}};
  std::uint64_t n = base;
  for (std::uint64_t m : factors) {
    if (n >= target) break;
    if (m < 1) throw InvalidArgument("factors must be positive");
    if (m > kMaxTarget) throw CapacityError("factor too large");
    s.steps.push_back({n, m});
    n *= m;
  }
  if (n < target)
    throw InvalidArgument("factor list reaches only " + std::to_string(n) + " vertices, below target " +
                          std::to_string(target));
  return s;
}

Exponent builder_exponent(Builder b) { return b == Builder::k8_odd ? kTwoThirds : kHalf; }

BuildSchedule build_schedule(Builder b, std::size_t target, const BuildOptions& options) {
  check_target(target);
  if (!options.factors.empty()) {
    BuildSchedule s = schedule_with_factors(target, options.base, options.factors);
    s.p = builder_exponent(b);
    return s;
  }
  return schedule(target, builder_exponent(b), options.base);
}

Colouring build_k4_unique(std::size_t target, const BuildOptions& options) {
  return run_schedule(build_schedule(Builder::k4_unique, target, options), target,
                      options.max_vertices, [](std::size_t m) { return trivial(m); });
}

Colouring build_k5_unique(std::size_t target, const BuildOptions& options) {
  return run_schedule(build_schedule(Builder::k5_unique, target, options), target,
                      options.max_vertices, [](std::size_t m) { return trivial(m); });
}

Colouring build_k8_odd(std::size_t target, const BuildOptions& options) {
  const BuildOptions aux{options.base, {}, options.max_vertices};
  return run_schedule(build_schedule(Builder::k8_odd, target, options), target,
                      options.max_vertices, [&](std::size_t m) { return build_k4_unique(m, aux); });
}

Colouring build(Builder b, std::size_t target, const BuildOptions& options) {
  switch (b) {
    case Builder::k4_unique: return build_k4_unique(target, options);
    case Builder::k5_unique: return build_k5_unique(target, options);
    case Builder::k8_odd: return build_k8_odd(target, options);
  }
  throw InvalidArgument("unknown builder");
}

std::vector<Claim> builder_claims(Builder b) {
  switch (b) {
    case Builder::k4_unique: return {{Property::unique, 4}};
    case Builder::k5_unique: return {{Property::unique, 3}, {Property::unique, 5}};
    case Builder::k8_odd: return {{Property::odd, 8}, {Property::unique, 4}};
  }
  return {};
}

const char* builder_name(Builder b) {
  switch (b) {
    case Builder::k4_unique: return "k4-unique";
    case Builder::k5_unique: return "k5-unique";
    case Builder::k8_odd: return "k8-odd";
  }
  return "?";
}

BigInt k4_recursion_colours(const BigInt& m, std::uint64_t base) {
  BigInt n = base;
  BigInt colours = BigInt(base) * (base - 1) / 2;
  while (n < m) {
    const BigInt f = schedule_factor(n, kHalf);
    colours = predicted_colour_count<BigInt>(colours, 1, f);
    n *= f;
  }
  return colours;
}

std::vector<GrowthRow> growth_report(Builder b, std::size_t steps, std::uint64_t base) {
  if (steps < 1) throw InvalidArgument("growth report needs at least one step");
  if (base < 2) throw InvalidArgument("base size must be at least 2");
  const Exponent p = builder_exponent(b);
  BigInt n = base;
  BigInt colours = BigInt(base) * (base - 1) / 2;
  std::vector<GrowthRow> rows{{n, colours, ratio_of(colours, n, p)}};
  for (std::size_t k = 0; k < steps; ++k) {
    const BigInt m = schedule_factor(n, p);
    const BigInt aux = b == Builder::k8_odd ? k4_recursion_colours(m, base) : BigInt(1);
    colours = predicted_colour_count<BigInt>(colours, aux, m);
    n *= m;
    rows.push_back({n, colours, ratio_of(colours, n, p)});
  }
  return rows;
}

std::string format_growth(std::span<const GrowthRow> rows, bool csv) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6);
  if (csv) {
    out << "step,size,colours,ratio\n";
    for (std::size_t k = 0; k < rows.size(); ++k)
      out << k << ',' << rows[k].size << ',' << rows[k].colours << ',' << rows[k].ratio << '\n';
  } else {
    for (std::size_t k = 0; k < rows.size(); ++k)
      out << "step " << k << " size " << rows[k].size << " colours " << rows[k].colours
          << " ratio " << rows[k].ratio << '\n';
  }
  return out.str();
}

}  // namespace egc
