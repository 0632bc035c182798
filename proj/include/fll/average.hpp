#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "fll/balls.hpp"
#include "fll/parallel.hpp"
#include "fll/word.hpp"

namespace fll {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or "p" for integers.
inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

enum class Quantity { kSumSi, kA, kRho, kSumSiSq, kBall1 };

inline constexpr std::array<Quantity, 5> kAllQuantities{Quantity::kSumSi, Quantity::kA,
                                                        Quantity::kRho, Quantity::kSumSiSq,
                                                        Quantity::kBall1};

inline std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::kSumSi: return "sum_si";
    case Quantity::kA: return "a";
    case Quantity::kRho: return "rho";
    case Quantity::kSumSiSq: return "sum_si_sq";
    case Quantity::kBall1: return "ball1";
  }
  return "?";
}

inline Quantity parse_quantity(std::string_view name) {
  for (Quantity q : kAllQuantities) {
    if (quantity_name(q) == name) return q;
  }
  throw UsageError("unknown quantity '" + std::string(name) + "'");
}

namespace detail {

inline void require_average_domain(std::size_t n, std::size_t m) {
  if (n < 2 || m < 2) throw RangeError("expectation formulas need n, m > 1");
}

inline Rational frac(long long p, long long q) { return Rational{BigInt{p}, BigInt{q}}; }

inline BigInt power(std::size_t base, std::size_t exp) {
  BigInt r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace detail

// E[sum s_i] = n + (n-2)(m-1)(m-2)/m^2
inline Rational expected_sum_si(std::size_t n, std::size_t m) {
  detail::require_average_domain(n, m);
  const auto N = static_cast<long long>(n), M = static_cast<long long>(m);
  return Rational{N} + Rational{N - 2} * detail::frac((M - 1) * (M - 2), M * M);
}

// E[a(x)] = 1 + (n-2)(m-1)(m-2)/m^2 + (n-1)/m
inline Rational expected_a(std::size_t n, std::size_t m) {
  detail::require_average_domain(n, m);
  const auto N = static_cast<long long>(n), M = static_cast<long long>(m);
  return Rational{1} + detail::frac((N - 2) * (M - 1) * (M - 2), M * M) + detail::frac(N - 1, M);
}

// E[rho(x)] = n - (n-1)/m
inline Rational expected_rho(std::size_t n, std::size_t m) {
  detail::require_average_domain(n, m);
  const auto N = static_cast<long long>(n), M = static_cast<long long>(m);
  return Rational{N} - detail::frac(N - 1, M);
}

// E[sum s_i^2] as printed:
//   n(4m^2-3m+2)/m^2 + (6m-4)/m^2 - 4 - (2/(m-1))(1 - 1/m^n)
inline Rational expected_sum_si_sq(std::size_t n, std::size_t m) {
  detail::require_average_domain(n, m);
  const auto N = static_cast<long long>(n), M = static_cast<long long>(m);
  const Rational inv_mn{BigInt{1}, detail::power(m, n)};
  return detail::frac(N * (4 * M * M - 3 * M + 2), M * M) + detail::frac(6 * M - 4, M * M) -
         Rational{4} - detail::frac(2, M - 1) * (Rational{1} - inv_mn);
}

// E[|L_1(x)|] as printed:
//   n^2(m + 1/m - 2) - n/m - (m-1)(m-2)/m^2 + 3 - 3/m + 2/m^2 + (m^n - 1)/(m^n (m-1))
inline Rational expected_ball_size_closed(std::size_t n, std::size_t m) {
  detail::require_average_domain(n, m);
  const auto N = static_cast<long long>(n), M = static_cast<long long>(m);
  const BigInt mn = detail::power(m, n);
  return Rational{N * N} * (Rational{M} + detail::frac(1, M) - Rational{2}) - detail::frac(N, M) -
         detail::frac((M - 1) * (M - 2), M * M) + Rational{3} - detail::frac(3, M) +
         detail::frac(2, M * M) + Rational{mn - 1, mn * (M - 1)};
}

inline Rational expected_closed_form(Quantity q, std::size_t n, std::size_t m) {
  switch (q) {
    case Quantity::kSumSi: return expected_sum_si(n, m);
    case Quantity::kA: return expected_a(n, m);
    case Quantity::kRho: return expected_rho(n, m);
    case Quantity::kSumSiSq: return expected_sum_si_sq(n, m);
    case Quantity::kBall1: return expected_ball_size_closed(n, m);
  }
  throw UsageError("unknown quantity");
}

struct OracleOptions {
  std::uint64_t max_space = WordSpace::kDefaultMaxSpace;
  unsigned workers = 1;
};

namespace detail {

// Exact mean of per_word(x) over Z_m^n.
template <typename PerWord>
Rational enumerate_mean(std::size_t n, std::size_t m, const OracleOptions& options,
                        PerWord per_word) {
  const WordSpace space{n, Alphabet{m}};
  space.require_within(options.max_space);
  const BigInt total = parallel_reduce(
      space.size(), options.workers, BigInt{0},
      [&](std::uint64_t begin, std::uint64_t end) {
        BigInt sum = 0;
        for (std::uint64_t i = begin; i < end; ++i) sum += per_word(space.at(i));
        return sum;
      },
      [](BigInt a, const BigInt& b) { return a + b; });
  return Rational{total, BigInt{space.size()}};
}

}  // namespace detail

// Exact average over all m^n words, from the word-level primitives. The
// ball quantity is counted by the LCS-filter ball, not the closed form.
inline Rational exact_average_oracle(std::size_t n, std::size_t m, Quantity q,
                                     const OracleOptions& options = {}) {
  if (q == Quantity::kBall1) {
    const WordSpace space{n, Alphabet{m}};
    space.require_within(options.max_space);
    if (n == 0) throw RangeError("ball average needs n >= 1");
    const auto sizes = oracle_ball_sizes(n, Alphabet{m}, 1, options.max_space, options.workers);
    BigInt total = 0;
    for (auto s : sizes) total += s;
    return Rational{total, BigInt{space.size()}};
  }
  return detail::enumerate_mean(n, m, options, [q](const Word& x) -> std::int64_t {
    const SegmentProfile p = alternating_segments(x);
    std::int64_t v = 0;
    switch (q) {
      case Quantity::kSumSi:
        for (auto s : p.lengths) v += static_cast<std::int64_t>(s);
        return v;
      case Quantity::kA: return static_cast<std::int64_t>(p.a());
      case Quantity::kRho: return static_cast<std::int64_t>(p.rho);
      case Quantity::kSumSiSq:
        for (auto s : p.lengths) v += static_cast<std::int64_t>(s * s);
        return v;
      case Quantity::kBall1: break;
    }
    return v;
  });
}

// Mean of the closed-form |L_1| over Z_m^n.
inline Rational average_of_closed_form(std::size_t n, std::size_t m,
                                       const OracleOptions& options = {}) {
  if (n == 0) throw RangeError("closed form needs n >= 1");
  return detail::enumerate_mean(n, m, options,
                                [](const Word& x) { return fll_ball1_size_closed_form(x); });
}

struct ExpectationEntry {
  Quantity quantity;
  Rational closed;
  Rational oracle;
  Rational delta;  // closed - oracle
};

struct ExpectationReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::array<ExpectationEntry, 5> entries;

  const ExpectationEntry& operator[](Quantity q) const {
    return entries[static_cast<std::size_t>(q)];
  }
};

inline ExpectationReport expectation_report(std::size_t n, std::size_t m,
                                            const OracleOptions& options = {}) {
  ExpectationReport report{n, m, {}};
  for (Quantity q : kAllQuantities) {
    ExpectationEntry e{q, expected_closed_form(q, n, m), exact_average_oracle(n, m, q, options), 0};
    e.delta = e.closed - e.oracle;
    report.entries[static_cast<std::size_t>(q)] = std::move(e);
  }
  return report;
}

}  // namespace fll
