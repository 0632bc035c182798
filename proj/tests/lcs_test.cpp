#include <gtest/gtest.h>

#include "test_util.hpp"

namespace fll {
namespace {

using testing::all_words;
using testing::w;

TEST(Llcs, Examples) {
  EXPECT_EQ(llcs(w("0011"), w("0101")), 3u);
  EXPECT_EQ(llcs(w("0110"), w("0110")), 4u);
  EXPECT_EQ(llcs(w("0000"), w("1111")), 0u);
  EXPECT_EQ(llcs(w(""), w("01")), 0u);
}

TEST(Llcs, AlphabetMismatch) { EXPECT_THROW(llcs(w("01"), w("01", 3)), AlphabetError); }

TEST(Llcs, MatchesRecursion) {
  for (auto [n, m] : {std::pair{6, 2}, {4, 3}}) {
    const auto words = all_words(n, m);
    for (const Word& x : words) {
      for (const Word& y : words) ASSERT_EQ(llcs(x, y), testing::slow_llcs(x, y));
    }
  }
  // Unequal lengths.
  for (const Word& x : all_words(5, 2)) {
    for (const Word& y : all_words(3, 2)) ASSERT_EQ(llcs(x, y), testing::slow_llcs(x, y));
  }
}

TEST(Distance, Examples) {
  EXPECT_EQ(fll_distance(w("01"), w("10")), 1u);
  EXPECT_EQ(fll_distance(w("0101"), w("0101")), 0u);
  EXPECT_EQ(fll_distance(w("00"), w("11")), 2u);
  const DistanceResult r = distance_result(w("0011"), w("0101"));
  EXPECT_EQ(r.llcs, 3u);
  EXPECT_EQ(r.distance, 1u);
  EXPECT_EQ(r.n, 4u);
}

TEST(Distance, LengthMismatch) { EXPECT_THROW(fll_distance(w("01"), w("010")), LengthError); }

TEST(Distance, NeverExceedsHamming) {
  const auto words = all_words(7, 2);
  for (const Word& x : words) {
    for (const Word& y : words) ASSERT_LE(fll_distance(x, y), hamming_distance(x, y));
  }
}

TEST(BandedTest, AgreesWithFullTable) {
  for (auto [n, m] : {std::pair{7, 2}, {5, 3}}) {
    const auto words = all_words(n, m);
    for (const Word& x : words) {
      for (const Word& y : words) {
        const std::size_t d = fll_distance(x, y);
        for (std::size_t t = 0; t <= static_cast<std::size_t>(n); ++t) {
          ASSERT_EQ(fll_distance_at_most(x, y, t), d <= t) << to_string(x) << " " << to_string(y) << " " << t;
        }
      }
    }
  }
}

TEST(Subsequence, Examples) {
  EXPECT_TRUE(is_subsequence(w("010"), w("00110100")));
  EXPECT_TRUE(is_subsequence(w(""), w("0110")));
  EXPECT_FALSE(is_subsequence(w("11"), w("00")));
  EXPECT_FALSE(is_subsequence(w("0110"), w("011")));
}

TEST(Subsequence, AgreesWithLlcs) {
  for (const Word& x : all_words(6, 2)) {
    for (std::size_t len = 0; len <= 6; ++len) {
      for (const Word& y : all_words(len, 2)) ASSERT_EQ(is_subsequence(y, x), llcs(x, y) == len);
    }
  }
}

TEST(Hamming, Basics) {
  EXPECT_EQ(hamming_distance(w("0101"), w("1010")), 4u);
  EXPECT_THROW(hamming_distance(w("01"), w("0")), LengthError);
}

}  // namespace
}  // namespace fll
