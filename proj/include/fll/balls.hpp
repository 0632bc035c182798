#pragma once

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

#include "fll/lcs.hpp"
#include "fll/parallel.hpp"
#include "fll/spheres.hpp"
#include "fll/word.hpp"

namespace fll {

struct BallResult {
  Word center;
  std::size_t radius = 0;
  std::optional<WordSet> members;
  std::uint64_t size = 0;
};

enum class BallMethod { kFilter, kBfs };

struct BallOptions {
  bool materialize = true;
  BallMethod method = BallMethod::kFilter;
  std::uint64_t max_space = WordSpace::kDefaultMaxSpace;
  unsigned workers = 1;
};

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    const std::uint64_t factor = n - k + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw RangeError("binomial coefficient overflows 64 bits");
    }
    result = result * factor / i;
  }
  return result;
}

// |B_t(x)| = sum_{i<=t} C(n,i) (m-1)^i.
inline std::uint64_t hamming_ball_size(std::size_t n, std::size_t m, std::size_t t) {
  if (m < 1) throw RangeError("alphabet size must be >= 1");
  if (t > n) throw RangeError("radius exceeds word length");
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i <= t; ++i) {
    const std::uint64_t term = binomial(n, i);
    if (power != 0 && term > std::numeric_limits<std::uint64_t>::max() / power) {
      throw RangeError("Hamming ball size overflows 64 bits");
    }
    if (total > std::numeric_limits<std::uint64_t>::max() - term * power) {
      throw RangeError("Hamming ball size overflows 64 bits");
    }
    total += term * power;
    if (i < t && m > 1 && power > std::numeric_limits<std::uint64_t>::max() / (m - 1)) {
      throw RangeError("Hamming ball size overflows 64 bits");
    }
    power *= (m - 1);
  }
  return total;
}

namespace detail {

inline void hamming_expand(std::vector<Symbol>& cur, std::size_t from, std::size_t budget,
                           Alphabet alphabet, std::vector<Word>& out) {
  out.emplace_back(cur, alphabet);
  if (budget == 0) return;
  for (std::size_t i = from; i < cur.size(); ++i) {
    const Symbol original = cur[i];
    for (Symbol s = 0; s < alphabet.size(); ++s) {
      if (s == original) continue;
      cur[i] = s;
      hamming_expand(cur, i + 1, budget - 1, alphabet, out);
    }
    cur[i] = original;
  }
}

}  // namespace detail

// B_t(x), generated by substituting at most t positions.
inline BallResult hamming_ball(const Word& x, std::size_t t) {
  if (t > x.size()) throw RangeError("radius exceeds word length");
  std::vector<Symbol> cur(x.symbols().begin(), x.symbols().end());
  std::vector<Word> out;
  detail::hamming_expand(cur, 0, t, x.alphabet(), out);
  WordSet members{x.size(), std::move(out)};
  const std::uint64_t size = members.size();
  return {x, t, std::move(members), size};
}

// The words at FLL distance exactly one: one deletion then one insertion,
// minus x itself.
inline std::vector<Word> fll_neighbors(const Word& x) {
  if (x.empty()) return {};
  std::vector<Word> out;
  for (const Word& w : del_ins_sphere(x, {1, 1})) {
    if (w != x) out.push_back(w);
  }
  return out;
}

namespace detail {

inline BallResult fll_ball_filter(const Word& x, std::size_t t, const BallOptions& options) {
  const WordSpace space{x.size(), x.alphabet()};
  space.require_within(options.max_space);
  struct Partial {
    std::uint64_t count = 0;
    std::vector<Word> members;
  };
  Partial total = parallel_reduce(
      space.size(), options.workers, Partial{},
      [&](std::uint64_t begin, std::uint64_t end) {
        Partial p;
        for (std::uint64_t i = begin; i < end; ++i) {
          Word y = space.at(i);
          if (fll_distance_at_most(x, y, t)) {
            ++p.count;
            if (options.materialize) p.members.push_back(std::move(y));
          }
        }
        return p;
      },
      [](Partial a, Partial b) {
        a.count += b.count;
        a.members.insert(a.members.end(), std::make_move_iterator(b.members.begin()),
                         std::make_move_iterator(b.members.end()));
        return a;
      });
  BallResult result{x, t, std::nullopt, total.count};
  if (options.materialize) result.members = WordSet{x.size(), std::move(total.members)};
  return result;
}

inline BallResult fll_ball_bfs(const Word& x, std::size_t t, const BallOptions& options) {
  const WordSpace space{x.size(), x.alphabet()};
  space.require_within(options.max_space);
  std::vector<Word> frontier{x};
  WordSet visited{x.size(), {x}};
  for (std::size_t level = 0; level < t && !frontier.empty(); ++level) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (Word& v : fll_neighbors(w)) next.push_back(std::move(v));
    }
    WordSet candidates{x.size(), std::move(next)};
    std::vector<Word> fresh;
    for (const Word& w : candidates) {
      if (!visited.contains(w)) fresh.push_back(w);
    }
    std::vector<Word> merged = visited.words();
    merged.insert(merged.end(), fresh.begin(), fresh.end());
    visited = WordSet{x.size(), std::move(merged)};
    frontier = std::move(fresh);
  }
  const std::uint64_t size = visited.size();
  BallResult result{x, t, std::nullopt, size};
  if (options.materialize) result.members = std::move(visited);
  return result;
}

}  // namespace detail

// L_t(x) = {y in Z_m^n : d_l(x, y) <= t}. The default method filters all of
// Z_m^n by the LCS test; kBfs walks t levels of the distance-one graph.
inline BallResult fll_ball(const Word& x, std::size_t t, const BallOptions& options = {}) {
  if (t > x.size()) throw RangeError("radius exceeds word length");
  return options.method == BallMethod::kFilter ? detail::fll_ball_filter(x, t, options)
                                               : detail::fll_ball_bfs(x, t, options);
}

inline std::uint64_t fll_ball_size(const Word& x, std::size_t t, const BallOptions& options = {}) {
  BallOptions o = options;
  o.materialize = false;
  return fll_ball(x, t, o).size;
}

// |L_t(x)| for every x in Z_m^n, in lexicographic index order, by the LCS
// filter. This is the brute-force reference used by the exhaustive sweeps.
inline std::vector<std::uint64_t> oracle_ball_sizes(std::size_t n, Alphabet alphabet,
                                                    std::size_t t,
                                                    std::uint64_t max_space = WordSpace::kDefaultMaxSpace,
                                                    unsigned workers = 1) {
  const WordSpace space{n, alphabet};
  space.require_within(max_space);
  if (t > n) throw RangeError("radius exceeds word length");
  const std::vector<Word> words = space.all(max_space);
  return parallel_map(words.size(), workers, [&](std::uint64_t i) {
    std::uint64_t count = 0;
    for (const Word& y : words) count += fll_distance_at_most(words[i], y, t);
    return count;
  });
}

// Closed-form |L_1(x)| from the run count and the maximal alternating
// segment lengths.
inline std::int64_t fll_ball1_size_closed_form(const Word& x) {
  if (x.empty()) throw RangeError("closed form needs n >= 1");
  const SegmentProfile profile = alternating_segments(x);
  const auto n = static_cast<std::int64_t>(x.size());
  const auto m = static_cast<std::int64_t>(x.m());
  std::int64_t size = static_cast<std::int64_t>(profile.rho) * (n * (m - 1) - 1) + 2;
  for (std::size_t s : profile.lengths) {
    const auto len = static_cast<std::int64_t>(s);
    size -= (len - 1) * (len - 2) / 2;
  }
  return size;
}

}  // namespace fll
