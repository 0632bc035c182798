#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "fll/word.hpp"

namespace fll {

// Length of a longest common subsequence. Row-by-row evaluation of the
// usual prefix recursion, keeping one row of the shorter word.
inline std::size_t llcs(const Word& x, const Word& y) {
  require_same_alphabet(x, y);
  const Word& outer = x.size() >= y.size() ? x : y;
  const Word& inner = x.size() >= y.size() ? y : x;
  const std::size_t cols = inner.size();
  std::vector<std::size_t> row(cols + 1, 0);
  for (std::size_t i = 0; i < outer.size(); ++i) {
    std::size_t diag = 0;  // row[j] of the previous outer index
    for (std::size_t j = 1; j <= cols; ++j) {
      const std::size_t up = row[j];
      row[j] = outer[i] == inner[j - 1] ? diag + 1 : std::max(up, row[j - 1]);
      diag = up;
    }
  }
  return row[cols];
}

struct DistanceResult {
  std::size_t llcs = 0;
  std::size_t distance = 0;
  std::size_t n = 0;
};

inline DistanceResult distance_result(const Word& x, const Word& y) {
  require_same_length(x, y);
  const std::size_t common = llcs(x, y);
  return {common, x.size() - common, x.size()};
}

// d_l(x, y) = n - llcs(x, y) on Z_m^n.
inline std::size_t fll_distance(const Word& x, const Word& y) {
  return distance_result(x, y).distance;
}

// d_l(x, y) <= t without the full table. A matched pair (i, j) on a common
// subsequence of length >= n - t has |i - j| <= t, so only the diagonal band
// of half-width t is evaluated; cells outside the band read as 0, which keeps
// every computed value a lower bound that is exact along any band path.
inline bool fll_distance_at_most(const Word& x, const Word& y, std::size_t t) {
  require_same_alphabet(x, y);
  require_same_length(x, y);
  const std::size_t n = x.size();
  if (t >= n) return true;
  const std::size_t width = 2 * t + 1;
  // band[i][d] holds L(i, j) with j = i + d - t.
  std::vector<std::size_t> prev(width + 2, 0), cur(width + 2, 0);
  auto at = [&](const std::vector<std::size_t>& row, std::size_t i, std::ptrdiff_t j) -> std::size_t {
    const std::ptrdiff_t d = j - static_cast<std::ptrdiff_t>(i) + static_cast<std::ptrdiff_t>(t);
    if (j < 0 || d < 0 || d >= static_cast<std::ptrdiff_t>(width)) return 0;
    return row[static_cast<std::size_t>(d)];
  };
  for (std::size_t i = 1; i <= n; ++i) {
    std::fill(cur.begin(), cur.end(), 0);
    for (std::size_t d = 0; d < width; ++d) {
      const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i + d) - static_cast<std::ptrdiff_t>(t);
      if (j < 1 || j > static_cast<std::ptrdiff_t>(n)) continue;
      std::size_t value;
      if (x[i - 1] == y[static_cast<std::size_t>(j - 1)]) {
        value = at(prev, i - 1, j - 1) + 1;
      } else {
        value = std::max(at(prev, i - 1, j), at(cur, i, j - 1));
      }
      cur[d] = value;
    }
    std::swap(prev, cur);
  }
  return at(prev, n, static_cast<std::ptrdiff_t>(n)) + t >= n;
}

// True iff y is a (|x| - |y|)-subsequence of x.
inline bool is_subsequence(const Word& y, const Word& x) {
  if (y.size() > x.size()) return false;
  std::size_t j = 0;
  for (std::size_t i = 0; i < x.size() && j < y.size(); ++i) {
    if (x[i] == y[j]) ++j;
  }
  return j == y.size();
}

inline std::size_t hamming_distance(const Word& x, const Word& y) {
  require_same_length(x, y);
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

}  // namespace fll
