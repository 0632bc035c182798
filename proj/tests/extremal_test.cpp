#include <cmath>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace fll {
namespace {

using testing::all_words;
using testing::w;

TEST(MinBall, Examples) {
  EXPECT_EQ(min_ball_size(4, 2, 1), 5u);
  EXPECT_EQ(min_ball_size(4, 3, 0), 1u);
  EXPECT_EQ(min_ball_size(5, 3, 1), 11u);
  EXPECT_THROW(min_ball_size(2, 2, 2), RangeError);
  EXPECT_THROW(min_ball_size(3, 1, 1), RangeError);
}

TEST(MinBall, MatchesExhaustiveMinimum) {
  for (auto [n, m] : {std::pair{5, 3}, {8, 2}}) {
    const WordSpace space{static_cast<std::size_t>(n), Alphabet{static_cast<std::size_t>(m)}};
    const auto ext = sweep_extremes(space, oracle_ball_sizes(n, Alphabet(m), 1));
    EXPECT_EQ(ext.min, static_cast<std::int64_t>(min_ball_size(n, m, 1)));
    EXPECT_EQ(ext.argmin.size(), static_cast<std::size_t>(m));
    for (const Word& x : ext.argmin) EXPECT_TRUE(is_constant(x));
  }
}

TEST(NonbinaryMax, Examples) {
  EXPECT_EQ(max_ball_size_nonbinary(4, 3), 30);
  EXPECT_EQ(max_ball_size_nonbinary(1, 3), 3);
  EXPECT_EQ(max_ball_size_nonbinary(5, 4), 72);
  EXPECT_EQ(max_ball_size_nonbinary(6, 3), 68);
  EXPECT_THROW(max_ball_size_nonbinary(4, 2), DomainError);
}

TEST(NonbinaryMax, Centers) {
  EXPECT_EQ(max_center_nonbinary(4, 3), w("0120", 3));
  EXPECT_EQ(max_center_nonbinary(2, 3), w("01", 3));
  const Word c = max_center_nonbinary(6, 3);
  EXPECT_EQ(c, w("012012", 3));
  EXPECT_TRUE(has_nonbinary_max_shape(c));
  // The maximum at n = 6, m = 3 is 68; enumeration agrees with the formula.
  EXPECT_EQ(fll_ball_size(c, 1), 68u);
  EXPECT_THROW(max_center_nonbinary(4, 2), DomainError);
}

TEST(NonbinaryMax, MatchesExhaustiveMaximum) {
  for (auto [n, m] : {std::pair{4, 3}, {5, 3}, {4, 4}}) {
    const WordSpace space{static_cast<std::size_t>(n), Alphabet{static_cast<std::size_t>(m)}};
    const auto ext = sweep_extremes(space, oracle_ball_sizes(n, Alphabet(m), 1));
    EXPECT_EQ(ext.max, max_ball_size_nonbinary(n, m));
    for (const Word& x : ext.argmax) EXPECT_TRUE(has_nonbinary_max_shape(x)) << to_string(x);
  }
}

TEST(Balanced, Words) {
  EXPECT_EQ(balanced_word(8, 2), w("01011010"));
  EXPECT_EQ(alternating_segments(balanced_word(8, 2)).lengths, (std::vector<std::size_t>{4, 4}));
  EXPECT_EQ(balanced_word(5, 5), w("00000"));
  EXPECT_EQ(balanced_word(4, 1), w("0101"));
  EXPECT_THROW(balanced_word(4, 5), RangeError);
  EXPECT_THROW(balanced_word(4, 0), RangeError);
  for (std::size_t n = 1; n <= 20; ++n) {
    for (std::size_t a = 1; a <= n; ++a) {
      const Word x = balanced_word(n, a);
      ASSERT_EQ(x.size(), n);
      ASSERT_TRUE(is_alpha_balanced(x, a)) << n << " " << a;
      ASSERT_EQ(fll_ball1_size_closed_form(x), balanced_ball_size(n, a)) << n << " " << a;
    }
  }
}

TEST(Balanced, Sizes) {
  EXPECT_EQ(balanced_ball_size(8, 2), 45);
  EXPECT_EQ(balanced_ball_size(8, 1), 37);
  EXPECT_EQ(balanced_ball_size(8, 3), 42);
  EXPECT_EQ(balanced_ball_size(4, 1), 11);
  EXPECT_EQ(balanced_ball_size(4, 2), 11);
}

TEST(Balanced, Predicate) {
  EXPECT_TRUE(is_alpha_balanced(w("01011010"), 2));
  EXPECT_FALSE(is_alpha_balanced(w("01011010"), 3));
  EXPECT_FALSE(is_alpha_balanced(w("00110100"), 4));  // lengths 1,2,4,1
  EXPECT_FALSE(is_alpha_balanced(w("012", 3), 2));
}

std::vector<std::size_t> float_selector(std::size_t n) {
  const double target = std::sqrt(1.0 + 2.0 * static_cast<double>(n)) / 2.0;
  double best = 1e300;
  std::vector<std::size_t> arg;
  for (std::size_t a = 1; a <= n; ++a) {
    const double d = std::fabs(static_cast<double>(a) - target);
    if (d < best - 1e-9) {
      best = d;
      arg = {a};
    } else if (std::fabs(d - best) <= 1e-9) {
      arg.push_back(a);
    }
  }
  return arg;
}

TEST(Selector, Examples) {
  EXPECT_EQ(t_selector(8), (std::vector<std::size_t>{2}));
  EXPECT_EQ(t_selector(4), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(t_selector(1), (std::vector<std::size_t>{1}));
  EXPECT_EQ(t_selector(12), (std::vector<std::size_t>{2, 3}));
  EXPECT_THROW(t_selector(0), RangeError);
}

TEST(Selector, MatchesFloatingPointSearch) {
  for (std::size_t n = 1; n <= 500; ++n) ASSERT_EQ(t_selector(n), float_selector(n)) << n;
}

TEST(BinaryMax, Values) {
  const std::int64_t expected[] = {2, 4, 7, 11, 17, 25, 34, 45, 57, 71, 86, 103};
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(max_ball_size_binary(n).value, expected[n - 1]) << n;
}

TEST(BinaryMax, MatchesExhaustiveMaximum) {
  for (std::size_t n = 2; n <= 10; ++n) {
    const WordSpace space{n, Alphabet{2}};
    const auto ext = sweep_extremes(space, oracle_ball_sizes(n, Alphabet{2}, 1));
    const ExtremalResult best = max_ball_size_binary(n);
    EXPECT_EQ(ext.max, best.value);
    for (const Word& x : ext.argmax) {
      bool balanced = false;
      for (auto a : best.alpha_set) balanced = balanced || is_alpha_balanced(x, a);
      EXPECT_TRUE(balanced) << to_string(x);
    }
  }
}

TEST(Crossover, Examples) {
  EXPECT_TRUE(crossover_predicate(8, 2));
  EXPECT_GT(balanced_ball_size(8, 2), balanced_ball_size(8, 1));
  EXPECT_FALSE(crossover_predicate(4, 2));
  EXPECT_EQ(balanced_ball_size(4, 2), balanced_ball_size(4, 1));
  EXPECT_FALSE(crossover_predicate(3, 2));
  EXPECT_LE(balanced_ball_size(3, 2), balanced_ball_size(3, 1));
  EXPECT_THROW(crossover_predicate(5, 1), RangeError);
}

TEST(Asymptotic, ApproachesTheMaximum) {
  EXPECT_NEAR(max_ball_asymptotic(1), 1.0 - std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(max_ball_asymptotic(100), 10000.0 - 1414.2135623730951, 1e-6);
  double prev = 0;
  for (std::size_t n : {64, 128, 256, 4096}) {
    const double ratio = static_cast<double>(max_ball_size_binary(n).value) / max_ball_asymptotic(n);
    const double gap = std::fabs(ratio - 1.0);
    if (prev > 0) EXPECT_LT(gap, prev);
    prev = gap;
  }
  EXPECT_LT(prev, 0.01);
}

}  // namespace
}  // namespace fll
