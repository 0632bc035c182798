#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "fll/word.hpp"

namespace fll {

// Numbers of deletions and insertions.
struct SphereSpec {
  std::size_t t_del = 0;
  std::size_t t_ins = 0;
};

// A set of equal-length words, kept sorted and deduplicated.
class WordSet {
 public:
  WordSet() = default;

  WordSet(std::size_t length, std::vector<Word> words) : length_{length}, words_{std::move(words)} {
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    for (const Word& w : words_) {
      if (w.size() != length_) throw LengthError("word set members must share one length");
    }
  }

  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const std::vector<Word>& words() const noexcept { return words_; }
  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }

  bool contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

  friend bool operator==(const WordSet&, const WordSet&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

inline std::size_t intersection_size(const WordSet& a, const WordSet& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

inline bool disjoint(const WordSet& a, const WordSet& b) {
  if (a.length() != b.length()) return true;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return false;
    }
  }
  return true;
}

namespace detail {

inline WordSet delete_one(const WordSet& in) {
  std::vector<Word> out;
  for (const Word& w : in) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      // Deleting any position of a run gives the same word; take the last.
      if (i + 1 < w.size() && w[i] == w[i + 1]) continue;
      out.push_back(w.erased(i));
    }
  }
  return WordSet{in.length() - 1, std::move(out)};
}

inline WordSet insert_one(const WordSet& in, Alphabet alphabet) {
  std::vector<Word> out;
  for (const Word& w : in) {
    for (std::size_t i = 0; i <= w.size(); ++i) {
      for (Symbol s = 0; s < alphabet.size(); ++s) out.push_back(w.inserted(i, s));
    }
  }
  return WordSet{in.length() + 1, std::move(out)};
}

inline WordSet delete_many(WordSet set, std::size_t t) {
  for (std::size_t k = 0; k < t; ++k) set = delete_one(set);
  return set;
}

inline WordSet insert_many(WordSet set, std::size_t t, Alphabet alphabet) {
  for (std::size_t k = 0; k < t; ++k) set = insert_one(set, alphabet);
  return set;
}

}  // namespace detail

// D_t(x): all t-subsequences of x.
inline WordSet deletion_sphere(const Word& x, std::size_t t) {
  if (t > x.size()) {
    throw RangeError("cannot delete " + std::to_string(t) + " symbols from a word of length " +
                     std::to_string(x.size()));
  }
  return detail::delete_many(WordSet{x.size(), {x}}, t);
}

// I_t(x): all t-supersequences of x over the word's alphabet.
inline WordSet insertion_sphere(const Word& x, std::size_t t) {
  return detail::insert_many(WordSet{x.size(), {x}}, t, x.alphabet());
}

// DI_{t1,t2}(x), deletions first: the union of I_{t2}(y) over y in D_{t1}(x).
inline WordSet del_ins_sphere(const Word& x, SphereSpec spec) {
  return detail::insert_many(deletion_sphere(x, spec.t_del), spec.t_ins, x.alphabet());
}

// Same channel with the insertions applied first.
inline WordSet ins_del_sphere(const Word& x, SphereSpec spec) {
  if (spec.t_del > x.size() + spec.t_ins) throw RangeError("too many deletions");
  return detail::delete_many(insertion_sphere(x, spec.t_ins), spec.t_del);
}

// (|D_1(x) ∩ D_1(y)|, |I_1(x) ∩ I_1(y)|)
inline std::pair<std::size_t, std::size_t> pairwise_intersection_sizes(const Word& x,
                                                                       const Word& y) {
  require_same_alphabet(x, y);
  require_same_length(x, y);
  if (x.empty()) throw RangeError("pairwise intersections need n >= 1");
  return {intersection_size(deletion_sphere(x, 1), deletion_sphere(y, 1)),
          intersection_size(insertion_sphere(x, 1), insertion_sphere(y, 1))};
}

}  // namespace fll
