#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fll/balls.hpp"
#include "fll/word.hpp"

namespace fll {

// Segment-length profile of an alpha-balanced binary word of length n:
// k segments of length c = ceil(n / alpha) and alpha - k of length c - 1,
// with k = n mod alpha taken in [1, alpha].
struct BalancedProfile {
  std::size_t n = 0;
  std::size_t alpha = 0;
  std::size_t c = 0;
  std::size_t k = 0;
};

inline BalancedProfile balanced_profile(std::size_t n, std::size_t alpha) {
  if (alpha < 1 || alpha > n) {
    throw RangeError("alpha must satisfy 1 <= alpha <= n (n=" + std::to_string(n) +
                     ", alpha=" + std::to_string(alpha) + ")");
  }
  const std::size_t c = (n + alpha - 1) / alpha;
  const std::size_t k = n % alpha == 0 ? alpha : n % alpha;
  return {n, alpha, c, k};
}

struct ExtremalResult {
  std::int64_t value = 0;
  std::optional<std::vector<Word>> argmax_set;
  std::vector<std::size_t> alpha_set;
};

// min |L_t(x)| over Z_m^n, attained only at sigma^n.
inline std::uint64_t min_ball_size(std::size_t n, std::size_t m, std::size_t t) {
  if (!(n > t)) throw RangeError("minimum ball size needs n > t");
  if (m < 2) throw RangeError("minimum ball size needs m > 1");
  return hamming_ball_size(n, m, t);
}

// max |L_1(x)| over Z_m^n for m > 2.
inline std::int64_t max_ball_size_nonbinary(std::size_t n, std::size_t m) {
  if (m <= 2) throw DomainError("non-binary maximum needs m > 2; use max_ball_size_binary");
  if (n < 1) throw RangeError("n must be >= 1");
  const auto nn = static_cast<std::int64_t>(n);
  return nn * nn * static_cast<std::int64_t>(m - 1) - nn + 2;
}

// n runs and x_i != x_{i+2} everywhere.
inline bool has_nonbinary_max_shape(const Word& x) {
  if (runs(x) != x.size()) return false;
  for (std::size_t i = 0; i + 2 < x.size(); ++i) {
    if (x[i] == x[i + 2]) return false;
  }
  return true;
}

// 012012... over Z_m, m >= 3.
inline Word max_center_nonbinary(std::size_t n, std::size_t m) {
  if (m < 3) throw DomainError("non-binary maximum center needs m >= 3");
  std::vector<Symbol> symbols(n);
  for (std::size_t i = 0; i < n; ++i) symbols[i] = static_cast<Symbol>(i % 3);
  return Word{std::move(symbols), Alphabet{m}};
}

// Canonical alpha-balanced binary word: the k long segments first, each
// segment starting with the last symbol of the one before it.
inline Word balanced_word(std::size_t n, std::size_t alpha) {
  const BalancedProfile p = balanced_profile(n, alpha);
  std::vector<Symbol> symbols;
  symbols.reserve(n);
  Symbol next = 0;
  for (std::size_t seg = 0; seg < alpha; ++seg) {
    const std::size_t len = seg < p.k ? p.c : p.c - 1;
    Symbol s = next;
    for (std::size_t i = 0; i < len; ++i) {
      symbols.push_back(s);
      s ^= 1U;
    }
    next = symbols.back();
  }
  return Word{std::move(symbols), Alphabet{2}};
}

inline bool is_alpha_balanced(const Word& x, std::size_t alpha) {
  if (x.m() != 2 || alpha < 1 || alpha > x.size()) return false;
  const SegmentProfile profile = alternating_segments(x);
  if (profile.a() != alpha) return false;
  const std::size_t c = (x.size() + alpha - 1) / alpha;
  for (std::size_t s : profile.lengths) {
    if (s != c && s + 1 != c) return false;
  }
  return true;
}

// |L_1| of any alpha-balanced word of length n.
inline std::int64_t balanced_ball_size(std::size_t n, std::size_t alpha) {
  const BalancedProfile p = balanced_profile(n, alpha);
  const auto nn = static_cast<std::int64_t>(n);
  const auto a = static_cast<std::int64_t>(alpha);
  const auto c = static_cast<std::int64_t>(p.c);
  const auto k = static_cast<std::int64_t>(p.k);
  // (c-1)(c-2) and (c-2)(c-3) are products of consecutive integers, hence even.
  return (nn + 1 - a) * (nn - 1) + 2 - k * ((c - 1) * (c - 2) / 2) -
         (a - k) * ((c - 2) * (c - 3) / 2);
}

// argmin over positive alpha of |alpha - sqrt(1 + 2n) / 2|, exactly.
// For a < b, |2a - s| < |2b - s| iff (a + b)^2 > s^2, with a tie on equality.
inline std::vector<std::size_t> t_selector(std::size_t n) {
  if (n < 1) throw RangeError("n must be >= 1");
  const std::uint64_t disc = 1 + 2 * static_cast<std::uint64_t>(n);
  std::vector<std::size_t> best{1};
  for (std::size_t alpha = 2; alpha <= n; ++alpha) {
    const std::uint64_t sum = best.front() + alpha;
    const std::uint64_t sq = sum * sum;
    if (sq < disc) {
      best = {alpha};
    } else if (sq == disc) {
      best.push_back(alpha);
    } else {
      break;  // distance grows from here on
    }
  }
  return best;
}

inline ExtremalResult max_ball_size_binary(std::size_t n) {
  ExtremalResult result;
  result.alpha_set = t_selector(n);
  result.value = balanced_ball_size(n, result.alpha_set.front());
  return result;
}

// n^2 - sqrt(2) n^{3/2}; leading terms only, meaningful as n grows.
inline double max_ball_asymptotic(std::size_t n) {
  const auto x = static_cast<double>(n);
  return x * x - std::sqrt(2.0) * std::pow(x, 1.5);
}

// n > 2(alpha-1)alpha, the condition under which alpha segments beat alpha-1.
inline bool crossover_predicate(std::size_t n, std::size_t alpha) {
  if (alpha < 2) throw RangeError("crossover needs alpha >= 2");
  return n > 2 * (alpha - 1) * alpha;
}

// Extremes of a per-word size table over Z_m^n (index order as WordSpace).
struct SweepExtremes {
  std::int64_t min = 0;
  std::int64_t max = 0;
  std::vector<Word> argmin;
  std::vector<Word> argmax;
};

template <typename Size>
SweepExtremes sweep_extremes(const WordSpace& space, const std::vector<Size>& sizes) {
  if (sizes.empty()) throw RangeError("empty size table");
  SweepExtremes out;
  out.min = static_cast<std::int64_t>(sizes.front());
  out.max = out.min;
  for (Size s : sizes) {
    out.min = std::min(out.min, static_cast<std::int64_t>(s));
    out.max = std::max(out.max, static_cast<std::int64_t>(s));
  }
  for (std::uint64_t i = 0; i < sizes.size(); ++i) {
    const auto s = static_cast<std::int64_t>(sizes[i]);
    if (s == out.min) out.argmin.push_back(space.at(i));
    if (s == out.max) out.argmax.push_back(space.at(i));
  }
  return out;
}

}  // namespace fll
