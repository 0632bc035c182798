#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fll/errors.hpp"

namespace fll {

using Symbol = std::uint32_t;

// The alphabet Z_m = {0, ..., m-1}.
class Alphabet {
 public:
  explicit Alphabet(std::size_t m = 2) : m_{checked(m)} {}

  std::uint32_t size() const noexcept { return m_; }
  bool contains(Symbol s) const noexcept { return s < m_; }

  friend auto operator<=>(const Alphabet&, const Alphabet&) = default;

 private:
  static std::uint32_t checked(std::size_t m) {
    if (m < 1 || m > std::numeric_limits<std::uint32_t>::max()) {
      throw RangeError("alphabet size must be >= 1, got " + std::to_string(m));
    }
    return static_cast<std::uint32_t>(m);
  }

  std::uint32_t m_;
};

// A word x in Z_m^n. Ordering is lexicographic on the symbols, so sorted
// containers of words come out in the order the CLI prints them.
class Word {
 public:
  Word() = default;

  Word(std::vector<Symbol> symbols, Alphabet alphabet)
      : symbols_{std::move(symbols)}, alphabet_{alphabet} {
    for (Symbol s : symbols_) {
      if (!alphabet_.contains(s)) {
        throw AlphabetError("symbol " + std::to_string(s) + " is not in Z_" +
                            std::to_string(alphabet_.size()));
      }
    }
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  Alphabet alphabet() const noexcept { return alphabet_; }
  std::uint32_t m() const noexcept { return alphabet_.size(); }

  // x_{[1,len]}
  Word prefix(std::size_t len) const {
    if (len > size()) throw RangeError("prefix longer than word");
    return Word{std::vector<Symbol>(symbols_.begin(), symbols_.begin() + len), alphabet_,
                Unchecked{}};
  }

  // Copy of the word with position i removed.
  Word erased(std::size_t i) const {
    std::vector<Symbol> out;
    out.reserve(size() - 1);
    out.insert(out.end(), symbols_.begin(), symbols_.begin() + i);
    out.insert(out.end(), symbols_.begin() + i + 1, symbols_.end());
    return Word{std::move(out), alphabet_, Unchecked{}};
  }

  // Copy of the word with s inserted before position i (i == size() appends).
  Word inserted(std::size_t i, Symbol s) const {
    if (!alphabet_.contains(s)) throw AlphabetError("inserted symbol out of range");
    std::vector<Symbol> out;
    out.reserve(size() + 1);
    out.insert(out.end(), symbols_.begin(), symbols_.begin() + i);
    out.push_back(s);
    out.insert(out.end(), symbols_.begin() + i, symbols_.end());
    return Word{std::move(out), alphabet_, Unchecked{}};
  }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  struct Unchecked {};
  Word(std::vector<Symbol> symbols, Alphabet alphabet, Unchecked)
      : symbols_{std::move(symbols)}, alphabet_{alphabet} {}

  std::vector<Symbol> symbols_;
  Alphabet alphabet_;
};

inline void require_same_alphabet(const Word& x, const Word& y) {
  if (x.alphabet() != y.alphabet()) {
    throw AlphabetError("words over different alphabets (m=" + std::to_string(x.m()) +
                        " vs m=" + std::to_string(y.m()) + ")");
  }
}

inline void require_same_length(const Word& x, const Word& y) {
  if (x.size() != y.size()) {
    throw LengthError("words of different length (" + std::to_string(x.size()) + " vs " +
                      std::to_string(y.size()) + ")");
  }
}

// Digit string when m <= 10, comma-separated integers otherwise.
inline Word parse_word(std::string_view text, std::size_t m) {
  const Alphabet alphabet{m};
  std::vector<Symbol> symbols;
  if (alphabet.size() <= 10) {
    symbols.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw ParseError("unexpected character '" + std::string(1, c) + "' in word \"" +
                         std::string(text) + "\"");
      }
      symbols.push_back(static_cast<Symbol>(c - '0'));
    }
    return Word{std::move(symbols), alphabet};
  }
  if (text.empty()) return Word{{}, alphabet};
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view field =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (field.empty()) throw ParseError("empty field in word \"" + std::string(text) + "\"");
    std::uint64_t value = 0;
    for (char c : field) {
      if (c < '0' || c > '9') {
        throw ParseError("unexpected character '" + std::string(1, c) + "' in word \"" +
                         std::string(text) + "\"");
      }
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      if (value > std::numeric_limits<Symbol>::max()) throw ParseError("symbol too large");
    }
    symbols.push_back(static_cast<Symbol>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Word{std::move(symbols), alphabet};
}

inline std::string to_string(const Word& x) {
  std::string out;
  if (x.m() <= 10) {
    out.reserve(x.size());
    for (Symbol s : x.symbols()) out.push_back(static_cast<char>('0' + s));
    return out;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(x[i]);
  }
  return out;
}

// sigma^n
inline Word constant_word(std::size_t n, Symbol sigma, Alphabet alphabet) {
  return Word{std::vector<Symbol>(n, sigma), alphabet};
}

inline bool is_constant(const Word& x) {
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] != x[0]) return false;
  }
  return true;
}

// Number of runs rho(x); 0 for the empty word.
inline std::size_t runs(const Word& x) {
  if (x.empty()) return 0;
  std::size_t count = 1;
  for (std::size_t i = 1; i < x.size(); ++i) count += x[i] != x[i - 1];
  return count;
}

// Maximal alternating segments. Indices are 1-based and inclusive.
struct SegmentProfile {
  std::size_t rho = 0;
  std::vector<std::pair<std::size_t, std::size_t>> segments;
  std::vector<std::size_t> lengths;

  std::size_t a() const noexcept { return segments.size(); }
};

// A segment [i, j] is reported when it alternates between two symbols and
// cannot be extended left or right. For m >= 3 consecutive segments can
// share one position (012 -> [1,2], [2,3]).
inline SegmentProfile alternating_segments(const Word& x) {
  SegmentProfile profile;
  profile.rho = runs(x);
  const std::size_t n = x.size();
  if (n == 0) return profile;

  // reach[i]: last 0-based index j such that x[i..j] alternates.
  std::vector<std::size_t> reach(n);
  reach[n - 1] = n - 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    if (x[i] == x[i + 1]) {
      reach[i] = i;
    } else if (i + 2 < n && x[i + 2] == x[i]) {
      reach[i] = reach[i + 1];
    } else {
      reach[i] = i + 1;
    }
  }
  // x[i..reach[i]] is left-maximal iff x[i-1..reach[i]] does not alternate,
  // and reach is non-decreasing, so that is reach[i-1] < reach[i].
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || reach[i - 1] < reach[i]) {
      profile.segments.emplace_back(i + 1, reach[i] + 1);
      profile.lengths.push_back(reach[i] - i + 1);
    }
  }
  return profile;
}

// a(x)
inline std::size_t segment_count(const Word& x) { return alternating_segments(x).a(); }

// Z_m^n in lexicographic order; index 0 is 0^n and the first symbol is the
// most significant digit.
class WordSpace {
 public:
  static constexpr std::uint64_t kDefaultMaxSpace = std::uint64_t{1} << 24;

  WordSpace(std::size_t n, Alphabet alphabet) : n_{n}, alphabet_{alphabet} {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (total > std::numeric_limits<std::uint64_t>::max() / alphabet.size()) {
        overflow_ = true;
        break;
      }
      total *= alphabet.size();
    }
    size_ = total;
  }

  std::size_t length() const noexcept { return n_; }
  Alphabet alphabet() const noexcept { return alphabet_; }

  // m^n, or CapacityError when it does not fit in 64 bits.
  std::uint64_t size() const {
    if (overflow_) throw CapacityError("m^n overflows 64 bits");
    return size_;
  }

  void require_within(std::uint64_t cap) const {
    if (overflow_ || size_ > cap) {
      throw CapacityError("word space " + std::to_string(alphabet_.size()) + "^" +
                          std::to_string(n_) + " exceeds enumeration cap " +
                          std::to_string(cap));
    }
  }

  Word at(std::uint64_t index) const {
    std::vector<Symbol> symbols(n_);
    for (std::size_t i = n_; i-- > 0;) {
      symbols[i] = static_cast<Symbol>(index % alphabet_.size());
      index /= alphabet_.size();
    }
    return Word{std::move(symbols), alphabet_};
  }

  std::uint64_t index_of(const Word& x) const {
    if (x.size() != n_) throw LengthError("word length does not match word space");
    if (x.alphabet() != alphabet_) throw AlphabetError("word alphabet does not match word space");
    std::uint64_t index = 0;
    for (Symbol s : x.symbols()) index = index * alphabet_.size() + s;
    return index;
  }

  // Every word, in order. Caller is responsible for the cap.
  std::vector<Word> all(std::uint64_t cap = kDefaultMaxSpace) const {
    require_within(cap);
    std::vector<Word> out;
    out.reserve(size_);
    for (std::uint64_t i = 0; i < size_; ++i) out.push_back(at(i));
    return out;
  }

 private:
  std::size_t n_;
  Alphabet alphabet_;
  std::uint64_t size_ = 0;
  bool overflow_ = false;
};

}  // namespace fll
