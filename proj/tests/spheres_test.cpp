#include <gtest/gtest.h>

#include "test_util.hpp"

namespace fll {
namespace {

using testing::all_words;
using testing::strings;
using testing::w;
using Strings = std::vector<std::string>;

TEST(DeletionSphere, Examples) {
  EXPECT_EQ(strings(deletion_sphere(w("000"), 1)), (Strings{"00"}));
  EXPECT_EQ(strings(deletion_sphere(w("010"), 1)), (Strings{"00", "01", "10"}));
  EXPECT_EQ(strings(deletion_sphere(w("0110"), 0)), (Strings{"0110"}));
  EXPECT_EQ(strings(deletion_sphere(w("01"), 2)), (Strings{""}));
  EXPECT_THROW(deletion_sphere(w("01"), 3), RangeError);
}

TEST(DeletionSphere, SingleDeletionSizeIsRunCount) {
  for (const Word& x : all_words(8, 2)) EXPECT_EQ(deletion_sphere(x, 1).size(), runs(x));
  for (const Word& x : all_words(5, 3)) EXPECT_EQ(deletion_sphere(x, 1).size(), runs(x));
}

TEST(InsertionSphere, Examples) {
  EXPECT_EQ(strings(insertion_sphere(w("0"), 1)), (Strings{"00", "01", "10"}));
  EXPECT_EQ(strings(insertion_sphere(w(""), 1)), (Strings{"0", "1"}));
  EXPECT_EQ(insertion_sphere(w("", 4), 1).size(), 4u);
}

TEST(InsertionSphere, SizeDoesNotDependOnTheWord) {
  // Binary: sum_{i<=t} C(n+t, i) for every center.
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t t = 1; t <= 2; ++t) {
      std::uint64_t expected = 0;
      for (std::size_t i = 0; i <= t; ++i) expected += binomial(n + t, i);
      for (const Word& x : all_words(n, 2)) ASSERT_EQ(insertion_sphere(x, t).size(), expected);
    }
  }
}

TEST(Spheres, DeletionInsertionDuality) {
  // y in D_t(x) iff x in I_t(y).
  for (std::size_t t = 1; t <= 2; ++t) {
    for (const Word& x : all_words(6, 2)) {
      const WordSet down = deletion_sphere(x, t);
      for (const Word& y : all_words(6 - t, 2)) {
        ASSERT_EQ(down.contains(y), insertion_sphere(y, t).contains(x));
      }
    }
  }
}

TEST(Spheres, MembersAreSubsequencesAndSupersequences) {
  for (const Word& x : all_words(6, 2)) {
    for (const Word& y : deletion_sphere(x, 2)) EXPECT_TRUE(is_subsequence(y, x));
    for (const Word& y : insertion_sphere(x, 2)) EXPECT_TRUE(is_subsequence(x, y));
  }
}

TEST(DelInsSphere, Examples) {
  EXPECT_EQ(strings(del_ins_sphere(w("0110"), {0, 0})), (Strings{"0110"}));
  EXPECT_TRUE(del_ins_sphere(w("01"), {1, 1}).contains(w("10")));
  EXPECT_EQ(del_ins_sphere(w("0101"), {1, 1}).size(), 11u);
  EXPECT_TRUE(del_ins_sphere(w("0101"), {1, 1}).contains(w("0101")));
}

TEST(DelInsSphere, OrderOfOperationsDoesNotMatter) {
  for (auto [n, m] : {std::pair{7, 2}, {4, 3}}) {
    for (const Word& x : all_words(n, m)) {
      for (std::size_t t1 = 0; t1 <= 2; ++t1) {
        for (std::size_t t2 = 0; t2 <= 2; ++t2) {
          ASSERT_EQ(del_ins_sphere(x, {t1, t2}), ins_del_sphere(x, {t1, t2}))
              << to_string(x) << " " << t1 << " " << t2;
        }
      }
    }
  }
}

TEST(DelInsSphere, BalancedSphereIsTheBall) {
  for (const Word& x : all_words(6, 2)) {
    for (std::size_t t = 0; t <= 2; ++t) {
      const WordSet di = del_ins_sphere(x, {t, t});
      for (const Word& y : all_words(6, 2)) ASSERT_EQ(di.contains(y), fll_distance(x, y) <= t);
    }
  }
}

TEST(Intersections, Examples) {
  EXPECT_EQ(pairwise_intersection_sizes(w("01"), w("10")), (std::pair<std::size_t, std::size_t>{2, 2}));
  EXPECT_EQ(pairwise_intersection_sizes(w("00"), w("11")), (std::pair<std::size_t, std::size_t>{0, 0}));
  EXPECT_THROW(pairwise_intersection_sizes(w("01"), w("010")), LengthError);
}

TEST(Intersections, AtMostTwoForDistinctBinaryWords) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto words = all_words(n, 2);
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        const auto [d, ins] = pairwise_intersection_sizes(words[i], words[j]);
        ASSERT_LE(d, 2u);
        ASSERT_LE(ins, 2u);
      }
    }
  }
}

TEST(WordSet, SortsAndDeduplicates) {
  const WordSet s{2, {w("11"), w("00"), w("11")}};
  EXPECT_EQ(strings(s), (Strings{"00", "11"}));
  EXPECT_TRUE(s.contains(w("00")));
  EXPECT_FALSE(s.contains(w("01")));
  EXPECT_THROW((WordSet{2, {w("0")}}), LengthError);
  const WordSet t{2, {w("11"), w("10")}};
  EXPECT_EQ(intersection_size(s, t), 1u);
  EXPECT_FALSE(disjoint(s, t));
}

}  // namespace
}  // namespace fll
