#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "fll/lcs.hpp"
#include "fll/parallel.hpp"
#include "fll/word.hpp"

namespace fll {

// Fixed-size bitset over graph vertices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t size) : size_{size}, blocks_((size + 63) / 64, 0) {}

  std::size_t capacity() const noexcept { return size_; }
  void set(std::size_t i) noexcept { blocks_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) noexcept { blocks_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const noexcept { return (blocks_[i / 64] >> (i % 64)) & 1U; }

  bool none() const noexcept {
    return std::all_of(blocks_.begin(), blocks_.end(), [](std::uint64_t b) { return b == 0; });
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto b : blocks_) c += static_cast<std::size_t>(std::popcount(b));
    return c;
  }

  VertexSet operator&(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] &= o.blocks_[i];
    return r;
  }

  VertexSet operator|(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] |= o.blocks_[i];
    return r;
  }

  // this \ o
  VertexSet minus(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] &= ~o.blocks_[i];
    return r;
  }

  std::size_t intersection_count(const VertexSet& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(blocks_[i] & o.blocks_[i]));
    }
    return c;
  }

  // Members in increasing order.
  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      std::uint64_t bits = blocks_[b];
      while (bits) {
        out.push_back(static_cast<std::uint32_t>(b * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> blocks_;
};

struct GraphOptions {
  std::uint64_t max_vertices = std::uint64_t{1} << 10;
  unsigned workers = 1;
};

// Z_m^n with an edge between distinct words at FLL distance <= t (t = 1 is
// the distance-one graph).
class FLLGraph {
 public:
  FLLGraph(std::size_t n, Alphabet alphabet, std::size_t t = 1, const GraphOptions& options = {})
      : n_{n}, t_{t}, space_{n, alphabet} {
    space_.require_within(options.max_vertices);
    words_ = space_.all(options.max_vertices);
    const std::size_t v = words_.size();
    adjacency_ = parallel_map(v, options.workers, [&](std::uint64_t i) {
      VertexSet row{v};
      for (std::size_t j = 0; j < v; ++j) {
        if (j != i && fll_distance_at_most(words_[i], words_[j], t_)) row.set(j);
      }
      return row;
    });
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t t() const noexcept { return t_; }
  std::size_t vertex_count() const noexcept { return words_.size(); }
  const Word& word(std::size_t i) const { return words_[i]; }
  const std::vector<Word>& words() const noexcept { return words_; }
  const VertexSet& neighbors(std::size_t i) const { return adjacency_[i]; }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i].test(j); }
  std::size_t index_of(const Word& w) const { return static_cast<std::size_t>(space_.index_of(w)); }

 private:
  std::size_t n_;
  std::size_t t_;
  WordSpace space_;
  std::vector<Word> words_;
  std::vector<VertexSet> adjacency_;
};

struct AnticodeSet {
  std::vector<Word> words;  // sorted
  std::size_t diameter_bound = 1;

  std::size_t size() const noexcept { return words.size(); }
};

namespace detail {

inline void require_uniform(const std::vector<Word>& s) {
  for (const Word& w : s) {
    require_same_length(s.front(), w);
    require_same_alphabet(s.front(), w);
  }
}

}  // namespace detail

// All pairwise FLL distances at most t.
inline bool is_anticode(const std::vector<Word>& s, std::size_t t) {
  if (s.empty()) return true;
  detail::require_uniform(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!fll_distance_at_most(s[i], s[j], t)) return false;
    }
  }
  return true;
}

// No word of Z_m^n outside s can join it without breaking the diameter.
inline bool is_maximal_anticode(const std::vector<Word>& s, std::size_t t,
                                std::uint64_t max_space = WordSpace::kDefaultMaxSpace) {
  if (s.empty()) throw RangeError("maximality is checked on a nonempty anticode");
  if (!is_anticode(s, t)) return false;
  const WordSpace space{s.front().size(), s.front().alphabet()};
  space.require_within(max_space);
  std::vector<Word> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const Word y = space.at(i);
    if (std::binary_search(sorted.begin(), sorted.end(), y)) continue;
    const bool extends = std::all_of(sorted.begin(), sorted.end(), [&](const Word& w) {
      return fll_distance_at_most(w, y, t);
    });
    if (extends) return false;
  }
  return true;
}

namespace detail {

// Bron-Kerbosch with Tomita pivoting; cliques are reported as sorted vertex
// index lists.
class CliqueSearch {
 public:
  explicit CliqueSearch(const FLLGraph& g) : g_{g} {}

  struct Branch {
    std::vector<std::uint32_t> r;
    VertexSet p;
    VertexSet x;
  };

  // Splits the root call into its independent sub-calls, in expansion order.
  std::vector<Branch> root_branches() const {
    const std::size_t v = g_.vertex_count();
    VertexSet p{v}, x{v};
    for (std::size_t i = 0; i < v; ++i) p.set(i);
    std::vector<Branch> out;
    if (v == 0) return out;
    const std::uint32_t u = pivot(p, x);
    for (std::uint32_t w : p.minus(g_.neighbors(u)).members()) {
      out.push_back({{w}, p & g_.neighbors(w), x & g_.neighbors(w)});
      p.reset(w);
      x.set(w);
    }
    return out;
  }

  void expand(std::vector<std::uint32_t>& r, VertexSet p, VertexSet x,
              std::vector<std::vector<std::uint32_t>>& out) const {
    if (p.none()) {
      if (x.none()) {
        std::vector<std::uint32_t> clique = r;
        std::sort(clique.begin(), clique.end());
        out.push_back(std::move(clique));
      }
      return;
    }
    const std::uint32_t u = pivot(p, x);
    for (std::uint32_t w : p.minus(g_.neighbors(u)).members()) {
      r.push_back(w);
      expand(r, p & g_.neighbors(w), x & g_.neighbors(w), out);
      r.pop_back();
      p.reset(w);
      x.set(w);
    }
  }

 private:
  std::uint32_t pivot(const VertexSet& p, const VertexSet& x) const {
    std::uint32_t best = 0;
    std::size_t best_count = 0;
    bool found = false;
    for (const VertexSet* s : {&p, &x}) {
      for (std::uint32_t u : s->members()) {
        const std::size_t c = p.intersection_count(g_.neighbors(u));
        if (!found || c > best_count) {
          best = u;
          best_count = c;
          found = true;
        }
      }
    }
    return best;
  }

  const FLLGraph& g_;
};

}  // namespace detail

// Maximal cliques of g as vertex index lists, sorted lexicographically.
inline std::vector<std::vector<std::uint32_t>> maximal_cliques(const FLLGraph& g,
                                                               unsigned workers = 1) {
  using Cliques = std::vector<std::vector<std::uint32_t>>;
  const detail::CliqueSearch search{g};
  const auto branches = search.root_branches();
  Cliques all = parallel_reduce(
      branches.size(), workers, Cliques{},
      [&](std::uint64_t begin, std::uint64_t end) {
        Cliques out;
        for (std::uint64_t b = begin; b < end; ++b) {
          std::vector<std::uint32_t> r = branches[b].r;
          search.expand(r, branches[b].p, branches[b].x, out);
        }
        return out;
      },
      [](Cliques a, Cliques b) {
        a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
        return a;
      });
  std::sort(all.begin(), all.end());
  return all;
}

// Every maximal anticode of diameter t in Z_m^n, each once, ordered by the
// lexicographic order of their sorted member lists.
inline std::vector<AnticodeSet> enumerate_maximal_anticodes(std::size_t n, std::size_t m,
                                                            std::size_t t,
                                                            const GraphOptions& options = {}) {
  const FLLGraph g{n, Alphabet{m}, t, options};
  std::vector<AnticodeSet> out;
  for (const auto& clique : maximal_cliques(g, options.workers)) {
    AnticodeSet a{{}, t};
    a.words.reserve(clique.size());
    for (std::uint32_t v : clique) a.words.push_back(g.word(v));
    out.push_back(std::move(a));
  }
  return out;
}

struct AnticodeSizeSummary {
  std::size_t max = 0;
  std::size_t min = 0;
  std::size_t count = 0;
};

inline AnticodeSizeSummary summarize_anticodes(const std::vector<AnticodeSet>& codes) {
  AnticodeSizeSummary s;
  s.count = codes.size();
  if (codes.empty()) return s;
  s.max = s.min = codes.front().size();
  for (const auto& a : codes) {
    s.max = std::max(s.max, a.size());
    s.min = std::min(s.min, a.size());
  }
  return s;
}

// (max, min) size over all maximal anticodes of diameter t.
inline std::pair<std::size_t, std::size_t> max_min_maximal_anticode_sizes(
    std::size_t n, std::size_t m, std::size_t t, const GraphOptions& options = {}) {
  const auto s = summarize_anticodes(enumerate_maximal_anticodes(n, m, t, options));
  return {s.max, s.min};
}

// {0^n} together with the n weight-one binary words.
inline AnticodeSet weight_le_one_anticode(std::size_t n) {
  if (n < 1) throw RangeError("n must be >= 1");
  const Alphabet binary{2};
  AnticodeSet a{{constant_word(n, 0, binary)}, 1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Symbol> e(n, 0);
    e[i] = 1;
    a.words.emplace_back(std::move(e), binary);
  }
  std::sort(a.words.begin(), a.words.end());
  return a;
}

// Drops the last coordinate; duplicates collapse.
inline std::vector<Word> puncture(const std::vector<Word>& s) {
  std::vector<Word> out;
  out.reserve(s.size());
  for (const Word& w : s) {
    if (w.empty()) throw RangeError("cannot puncture the empty word");
    out.push_back(w.prefix(w.size() - 1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool has_suffix(const Word& w, Symbol a, Symbol b) {
  return w.size() >= 2 && w[w.size() - 2] == a && w[w.size() - 1] == b;
}

inline std::size_t count_suffix(const std::vector<Word>& s, Symbol a, Symbol b) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [&](const Word& w) { return has_suffix(w, a, b); }));
}

// Three words ending 00 leave room for at most one ending 01.
inline bool suffix_00_property_holds(const std::vector<Word>& anticode) {
  return count_suffix(anticode, 0, 0) < 3 || count_suffix(anticode, 0, 1) <= 1;
}

// Three words ending 01 leave room for at most one ending 00.
inline bool suffix_01_property_holds(const std::vector<Word>& anticode) {
  return count_suffix(anticode, 0, 1) < 3 || count_suffix(anticode, 0, 0) <= 1;
}

// No two distinct words a, a' ending 00 whose last-bit flips b, b' (ending
// 01, sharing the length-(n-1) prefix) are both present.
inline bool shared_prefix_property_holds(const std::vector<Word>& anticode) {
  std::vector<Word> sorted = anticode;
  std::sort(sorted.begin(), sorted.end());
  std::size_t pairs = 0;
  for (const Word& a : sorted) {
    if (!has_suffix(a, 0, 0)) continue;
    const Word b = a.prefix(a.size() - 1).inserted(a.size() - 1, 1);
    if (std::binary_search(sorted.begin(), sorted.end(), b)) ++pairs;
  }
  return pairs <= 1;
}

// Puncturing keeps the size and the diameter-one property.
inline bool puncture_preserves(const std::vector<Word>& anticode) {
  const auto punctured = puncture(anticode);
  return punctured.size() == anticode.size() && is_anticode(punctured, 1);
}

}  // namespace fll
