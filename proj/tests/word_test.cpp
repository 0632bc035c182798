#include <gtest/gtest.h>

#include "test_util.hpp"

namespace fll {
namespace {

using testing::all_words;
using testing::w;

TEST(ParseWord, BinaryDigits) {
  const Word x = w("00110100");
  EXPECT_EQ(x.size(), 8u);
  EXPECT_EQ(x.m(), 2u);
  EXPECT_EQ(to_string(x), "00110100");
}

TEST(ParseWord, EmptyIsLengthZero) { EXPECT_TRUE(w("").empty()); }

TEST(ParseWord, SymbolOutsideAlphabet) {
  EXPECT_THROW(parse_word("3", 3), AlphabetError);
  EXPECT_THROW(parse_word("0120", 2), AlphabetError);
}

TEST(ParseWord, Malformed) {
  EXPECT_THROW(parse_word("01a", 2), ParseError);
  EXPECT_THROW(parse_word("0 1", 2), ParseError);
}

TEST(ParseWord, LargeAlphabetUsesCommas) {
  const Word x = parse_word("10,0,11", 12);
  ASSERT_EQ(x.size(), 3u);
  EXPECT_EQ(x[0], 10u);
  EXPECT_EQ(x[2], 11u);
  EXPECT_EQ(to_string(x), "10,0,11");
  EXPECT_THROW(parse_word("12", 12), AlphabetError);
  EXPECT_THROW(parse_word("1,,2", 12), ParseError);
}

TEST(ParseWord, RoundTripsEverySmallWord) {
  for (std::size_t m : {2, 3, 5}) {
    for (const Word& x : all_words(4, m)) EXPECT_EQ(parse_word(to_string(x), m), x);
  }
}

TEST(Alphabet, RejectsEmpty) { EXPECT_THROW(Alphabet{0}, RangeError); }

TEST(Word, EditsKeepAlphabet) {
  const Word x = w("0110");
  EXPECT_EQ(x.erased(0), w("110"));
  EXPECT_EQ(x.inserted(4, 0), w("01100"));
  EXPECT_EQ(x.prefix(2), w("01"));
  EXPECT_THROW((void)x.inserted(1, 2), AlphabetError);
}

TEST(Word, OrderIsLexicographic) {
  EXPECT_LT(w("0011"), w("0101"));
  EXPECT_LT(w("01"), w("010"));
}

TEST(Runs, Examples) {
  EXPECT_EQ(runs(w("00110100")), 5u);
  EXPECT_EQ(runs(w("0000")), 1u);
  EXPECT_EQ(runs(w("0120", 3)), 4u);
  EXPECT_EQ(runs(w("")), 0u);
}

TEST(Segments, MixedRunsExample) {
  const SegmentProfile p = alternating_segments(w("00110100"));
  EXPECT_EQ(p.rho, 5u);
  EXPECT_EQ(p.a(), 4u);
  EXPECT_EQ(p.lengths, (std::vector<std::size_t>{1, 2, 4, 1}));
}

TEST(Segments, TernarySegmentsShareAPosition) {
  const SegmentProfile p = alternating_segments(w("012", 3));
  EXPECT_EQ(p.lengths, (std::vector<std::size_t>{2, 2}));
  ASSERT_EQ(p.segments.size(), 2u);
  EXPECT_EQ(p.segments[0], (std::pair<std::size_t, std::size_t>{1, 2}));
  EXPECT_EQ(p.segments[1], (std::pair<std::size_t, std::size_t>{2, 3}));
}

TEST(Segments, SmallCases) {
  EXPECT_EQ(segment_count(w("0101")), 1u);
  EXPECT_EQ(segment_count(w("010")), 1u);
  EXPECT_EQ(segment_count(w("00110100")), 4u);
  EXPECT_EQ(segment_count(w("00000")), 5u);
  EXPECT_EQ(segment_count(w("")), 0u);
}

// An interval is alternating when x_i = x_{i+2} inside it and x_i != x_{i+1}.
bool alternating(const Word& x, std::size_t l, std::size_t r) {
  for (std::size_t i = l; i + 1 <= r; ++i) {
    if (x[i] == x[i + 1]) return false;
    if (i + 2 <= r && x[i] != x[i + 2]) return false;
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> brute_segments(const Word& x) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = x.size();
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t r = l; r < n; ++r) {
      if (!alternating(x, l, r)) continue;
      const bool left_max = l == 0 || !alternating(x, l - 1, r);
      const bool right_max = r + 1 == n || !alternating(x, l, r + 1);
      if (left_max && right_max) out.emplace_back(l + 1, r + 1);
    }
  }
  return out;
}

TEST(Segments, MatchIntervalBruteForce) {
  for (auto [n, m] : {std::pair{8, 2}, {6, 3}, {5, 4}}) {
    for (const Word& x : all_words(n, m)) {
      EXPECT_EQ(alternating_segments(x).segments, brute_segments(x)) << to_string(x);
    }
  }
}

TEST(Segments, BinaryRunsPlusSegmentsIsNPlusOne) {
  for (std::size_t n = 1; n <= 14; ++n) {
    for (const Word& x : all_words(n, 2)) {
      const SegmentProfile p = alternating_segments(x);
      ASSERT_EQ(p.rho + p.a(), n + 1) << to_string(x);
    }
  }
}

TEST(Segments, LengthsSumToRunsPlusSegmentsMinusOne) {
  // Boundaries at a repeated symbol split cleanly; every other boundary
  // shares one position.
  for (auto [n, m] : {std::pair{6, 3}, {5, 4}, {8, 2}}) {
    for (const Word& x : all_words(n, m)) {
      const SegmentProfile p = alternating_segments(x);
      std::size_t sum = 0;
      for (auto s : p.lengths) sum += s;
      EXPECT_EQ(sum, p.rho + p.a() - 1) << to_string(x);
    }
  }
}

TEST(Constant, Detection) {
  EXPECT_TRUE(is_constant(constant_word(4, 1, Alphabet{2})));
  EXPECT_FALSE(is_constant(w("0001")));
  EXPECT_THROW(constant_word(3, 2, Alphabet{2}), AlphabetError);
}

TEST(WordSpace, IndexOrderIsLexicographic) {
  const WordSpace space{3, Alphabet{3}};
  EXPECT_EQ(space.size(), 27u);
  Word prev = space.at(0);
  for (std::uint64_t i = 1; i < space.size(); ++i) {
    const Word x = space.at(i);
    EXPECT_LT(prev, x);
    EXPECT_EQ(space.index_of(x), i);
    prev = x;
  }
}

TEST(WordSpace, Caps) {
  const WordSpace space{30, Alphabet{2}};
  EXPECT_THROW(space.require_within(WordSpace::kDefaultMaxSpace), CapacityError);
  EXPECT_THROW(WordSpace(100, Alphabet{4}).size(), CapacityError);
  EXPECT_THROW(space.index_of(w("01")), LengthError);
}

}  // namespace
}  // namespace fll
