#include <algorithm>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace fll {
namespace {

using testing::all_words;
using testing::w;

std::vector<Word> ws(std::initializer_list<std::string_view> list) {
  std::vector<Word> out;
  for (auto s : list) out.push_back(w(s));
  return out;
}

TEST(IsAnticode, Examples) {
  EXPECT_TRUE(is_anticode(weight_le_one_anticode(5).words, 1));
  EXPECT_FALSE(is_anticode(ws({"00", "11"}), 1));
  EXPECT_TRUE(is_anticode(ws({"0110"}), 0));
  EXPECT_THROW(is_anticode(ws({"00", "011"}), 1), LengthError);
}

TEST(IsMaximal, Examples) {
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_TRUE(is_maximal_anticode(weight_le_one_anticode(n).words, 1));
  auto sub = weight_le_one_anticode(4).words;
  sub.pop_back();
  EXPECT_FALSE(is_maximal_anticode(sub, 1));
  EXPECT_FALSE(is_maximal_anticode(ws({"0110"}), 1));
}

TEST(WeightLeOne, Members) {
  EXPECT_EQ(weight_le_one_anticode(4).words, ws({"0000", "0001", "0010", "0100", "1000"}));
  EXPECT_EQ(weight_le_one_anticode(1).words, ws({"0", "1"}));
}

TEST(Graph, EdgesAreDistanceOne) {
  const FLLGraph g{4, Alphabet{2}};
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    EXPECT_FALSE(g.adjacent(i, i));
    for (std::size_t j = 0; j < g.vertex_count(); ++j) {
      EXPECT_EQ(g.adjacent(i, j), i != j && fll_distance(g.word(i), g.word(j)) == 1);
      EXPECT_EQ(g.adjacent(i, j), g.adjacent(j, i));
    }
  }
  EXPECT_THROW((FLLGraph{12, Alphabet{2}}), CapacityError);
}

// Maximal cliques by testing every subset, for tiny graphs.
std::vector<std::vector<Word>> brute_maximal(std::size_t n, std::size_t m, std::size_t t) {
  const auto words = all_words(n, m);
  const std::size_t v = words.size();
  std::vector<std::vector<Word>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << v); ++mask) {
    std::vector<Word> s;
    for (std::size_t i = 0; i < v; ++i) {
      if (mask >> i & 1) s.push_back(words[i]);
    }
    if (!is_anticode(s, t)) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < v && maximal; ++i) {
      if (mask >> i & 1) continue;
      auto bigger = s;
      bigger.push_back(words[i]);
      maximal = !is_anticode(bigger, t);
    }
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Word>> enumerated(std::size_t n, std::size_t m, std::size_t t) {
  std::vector<std::vector<Word>> out;
  for (const auto& a : enumerate_maximal_anticodes(n, m, t)) out.push_back(a.words);
  return out;
}

TEST(Enumeration, MatchesSubsetBruteForce) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t t = 1; t <= 2 && t <= n; ++t) EXPECT_EQ(enumerated(n, 2, t), brute_maximal(n, 2, t)) << n;
  }
  EXPECT_EQ(enumerated(2, 3, 1), brute_maximal(2, 3, 1));
}

TEST(Enumeration, AgreesWithDefinitionForFive) {
  for (const auto& a : enumerate_maximal_anticodes(5, 2, 1)) {
    EXPECT_TRUE(is_anticode(a.words, 1));
    EXPECT_TRUE(is_maximal_anticode(a.words, 1));
  }
}

TEST(Enumeration, WholeSpaceAtFullRadius) {
  const auto codes = enumerate_maximal_anticodes(3, 2, 3);
  ASSERT_EQ(codes.size(), 1u);
  EXPECT_EQ(codes.front().size(), 8u);
}

TEST(Enumeration, SizeBounds) {
  EXPECT_EQ(max_min_maximal_anticode_sizes(5, 2, 1), (std::pair<std::size_t, std::size_t>{6, 4}));
  EXPECT_EQ(max_min_maximal_anticode_sizes(3, 2, 1), (std::pair<std::size_t, std::size_t>{4, 4}));
  EXPECT_EQ(max_min_maximal_anticode_sizes(2, 2, 1).first, 3u);
  const auto three = enumerate_maximal_anticodes(3, 2, 1);
  EXPECT_TRUE(std::any_of(three.begin(), three.end(), [](const AnticodeSet& a) { return a.size() == 4; }));
}

TEST(Enumeration, ParallelMatchesSerial) {
  GraphOptions parallel;
  parallel.workers = 4;
  const auto a = enumerate_maximal_anticodes(6, 2, 1);
  const auto b = enumerate_maximal_anticodes(6, 2, 1, parallel);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].words, b[i].words);
}

TEST(Puncture, Examples) {
  EXPECT_EQ(puncture(ws({"000", "001"})), ws({"00"}));
  EXPECT_EQ(puncture(ws({"010", "100"})), ws({"01", "10"}));
}

TEST(Puncture, CommonLastSymbolPreservesAnticodes) {
  for (std::size_t n = 3; n <= 6; ++n) {
    for (const auto& a : enumerate_maximal_anticodes(n, 2, 1)) {
      for (Symbol s = 0; s < 2; ++s) {
        std::vector<Word> sub;
        for (const Word& x : a.words) {
          if (x.symbols().back() == s) sub.push_back(x);
        }
        if (!sub.empty()) EXPECT_TRUE(puncture_preserves(sub));
      }
    }
  }
}

TEST(SuffixProperties, HoldOnAllMaximalAnticodes) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& a : enumerate_maximal_anticodes(n, 2, 1)) {
      EXPECT_TRUE(suffix_00_property_holds(a.words));
      EXPECT_TRUE(suffix_01_property_holds(a.words));
      EXPECT_TRUE(shared_prefix_property_holds(a.words));
    }
  }
}

TEST(SuffixProperties, DetectViolations) {
  EXPECT_FALSE(suffix_00_property_holds(ws({"0000", "0100", "1000", "0001", "1001"})));
  EXPECT_FALSE(suffix_01_property_holds(ws({"0001", "0101", "1001", "0000", "1000"})));
  EXPECT_FALSE(shared_prefix_property_holds(ws({"0000", "0001", "1000", "1001"})));
  EXPECT_EQ(count_suffix(ws({"0100", "0001", "11"}), 0, 1), 1u);
}

TEST(VertexSet, Operations) {
  VertexSet a{130}, b{130};
  a.set(1);
  a.set(129);
  b.set(129);
  b.set(64);
  EXPECT_EQ(a.count(), 2u);
  EXPECT_EQ(a.intersection_count(b), 1u);
  EXPECT_EQ((a & b).members(), (std::vector<std::uint32_t>{129}));
  EXPECT_EQ((a | b).members(), (std::vector<std::uint32_t>{1, 64, 129}));
  EXPECT_EQ(a.minus(b).members(), (std::vector<std::uint32_t>{1}));
  a.reset(1);
  a.reset(129);
  EXPECT_TRUE(a.none());
}

}  // namespace
}  // namespace fll
