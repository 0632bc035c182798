#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fll/lcs.hpp"
#include "fll/spheres.hpp"
#include "fll/word.hpp"

namespace fll {

// A nonempty set of distinct equal-length codewords over one alphabet.
class Codebook {
 public:
  explicit Codebook(std::vector<Word> codewords) : words_{std::move(codewords)} {
    if (words_.empty()) throw RangeError("a codebook needs at least one codeword");
    for (const Word& w : words_) {
      require_same_alphabet(words_.front(), w);
      require_same_length(words_.front(), w);
    }
    std::sort(words_.begin(), words_.end());
    const auto dup = std::adjacent_find(words_.begin(), words_.end());
    if (dup != words_.end()) throw DomainError("duplicate codeword " + to_string(*dup));
  }

  std::size_t size() const noexcept { return words_.size(); }
  std::size_t length() const noexcept { return words_.front().size(); }
  Alphabet alphabet() const noexcept { return words_.front().alphabet(); }
  const std::vector<Word>& words() const noexcept { return words_; }
  const Word& operator[](std::size_t i) const { return words_[i]; }

 private:
  std::vector<Word> words_;  // sorted
};

// Reads "n m" on the first line and one word per line after it. Blank lines
// and lines starting with '#' are skipped.
inline Codebook parse_codebook(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    const std::size_t first = line.find_first_not_of(" \t");
    line = first == std::string::npos ? "" : line.substr(first);
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  if (lines.empty()) throw ParseError("code file is empty");
  std::size_t n = 0, m = 0;
  {
    const std::string& header = lines.front();
    const std::size_t space = header.find_first_of(" \t");
    if (space == std::string::npos) throw ParseError("code file header must be \"n m\"");
    try {
      std::size_t used = 0;
      n = std::stoul(header.substr(0, space), &used);
      const std::string rest = header.substr(header.find_first_not_of(" \t", space));
      m = std::stoul(rest, &used);
      if (used != rest.size()) throw ParseError("trailing text in code file header");
    } catch (const std::logic_error&) {
      throw ParseError("code file header must be \"n m\", got \"" + header + "\"");
    }
  }
  std::vector<Word> words;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Word w = parse_word(lines[i], m);
    if (w.size() != n) {
      throw LengthError("codeword \"" + lines[i] + "\" has length " + std::to_string(w.size()) +
                        ", header says " + std::to_string(n));
    }
    words.push_back(std::move(w));
  }
  return Codebook{std::move(words)};
}

// Index pair of the first codeword pair, in lexicographic pair order, that
// fails pair_ok; nullopt if none does.
template <typename PairOk>
std::optional<std::pair<std::size_t, std::size_t>> first_violating_pair(const Codebook& c,
                                                                        PairOk pair_ok) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (!pair_ok(c[i], c[j])) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

namespace detail {

inline void require_deletions_fit(const Codebook& c, std::size_t t) {
  if (t > c.length()) {
    throw RangeError("t = " + std::to_string(t) + " exceeds codeword length " +
                     std::to_string(c.length()));
  }
}

inline constexpr std::size_t kMaxSphereLength = 24;

inline void require_sphere_capacity(const Codebook& c, std::size_t grown) {
  if (c.length() + grown > kMaxSphereLength) {
    throw CapacityError("sphere enumeration limited to words of length " +
                        std::to_string(kMaxSphereLength));
  }
}

// Sphere-disjointness over all pairs, computing each codeword's sphere once.
template <typename SphereFn>
bool spheres_pairwise_disjoint(const Codebook& c, SphereFn sphere) {
  std::vector<WordSet> spheres;
  spheres.reserve(c.size());
  for (const Word& w : c.words()) spheres.push_back(sphere(w));
  for (std::size_t i = 0; i < spheres.size(); ++i) {
    for (std::size_t j = i + 1; j < spheres.size(); ++j) {
      if (!disjoint(spheres[i], spheres[j])) return false;
    }
  }
  return true;
}

}  // namespace detail

// D_t(c) and D_t(c') disjoint for all distinct pairs, via llcs(c, c') < n - t.
inline bool is_t_deletion_correcting(const Codebook& c, std::size_t t) {
  detail::require_deletions_fit(c, t);
  const std::size_t n = c.length();
  return !first_violating_pair(c, [&](const Word& a, const Word& b) { return llcs(a, b) + t < n; });
}

// Same predicate straight from the deletion spheres.
inline bool is_t_deletion_correcting_by_spheres(const Codebook& c, std::size_t t) {
  detail::require_deletions_fit(c, t);
  return detail::spheres_pairwise_disjoint(c, [t](const Word& w) { return deletion_sphere(w, t); });
}

inline bool is_t_insertion_correcting(const Codebook& c, std::size_t t) {
  detail::require_sphere_capacity(c, t);
  return detail::spheres_pairwise_disjoint(c, [t](const Word& w) { return insertion_sphere(w, t); });
}

inline bool is_del_ins_correcting(const Codebook& c, std::size_t t_del, std::size_t t_ins) {
  detail::require_deletions_fit(c, t_del);
  detail::require_sphere_capacity(c, t_ins);
  return detail::spheres_pairwise_disjoint(
      c, [&](const Word& w) { return del_ins_sphere(w, {t_del, t_ins}); });
}

inline std::size_t min_fll_distance(const Codebook& c) {
  if (c.size() < 2) throw SingletonError("minimum distance needs at least two codewords");
  std::size_t best = c.length();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) best = std::min(best, fll_distance(c[i], c[j]));
  }
  return best;
}

// No received word at FLL distance exactly e from one codeword lies within
// distance e - 1 of another, i.e. a radius-(e-1) decoder never mis-decodes e
// errors. The balls L_{e-1}(c') are enumerated as DI_{e-1,e-1}(c').
inline bool detects_fll_errors(const Codebook& c, std::size_t e) {
  if (e == 0) throw RangeError("detection needs e >= 1");
  detail::require_deletions_fit(c, e - 1);
  detail::require_sphere_capacity(c, e - 1);
  for (std::size_t j = 0; j < c.size(); ++j) {
    const WordSet near = del_ins_sphere(c[j], {e - 1, e - 1});
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i == j) continue;
      for (const Word& y : near) {
        if (fll_distance(c[i], y) == e) return false;
      }
    }
  }
  return true;
}

// Corrects t FLL errors and detects exactly t + 1 of them.
inline bool correct_and_detect_profile(const Codebook& c, std::size_t t) {
  if (c.size() < 2) throw SingletonError("profile needs at least two codewords");
  return is_del_ins_correcting(c, t, t) && detects_fll_errors(c, t + 1);
}

// |C| distinct codewords drawn uniformly from Z_m^n.
template <typename Rng>
Codebook random_codebook(std::size_t n, std::size_t m, std::size_t size, Rng& rng) {
  const WordSpace space{n, Alphabet{m}};
  if (size == 0 || size > space.size()) throw RangeError("codebook size out of range");
  std::uniform_int_distribution<std::uint64_t> pick(0, space.size() - 1);
  std::vector<std::uint64_t> chosen;
  while (chosen.size() < size) {
    const std::uint64_t idx = pick(rng);
    if (std::find(chosen.begin(), chosen.end(), idx) == chosen.end()) chosen.push_back(idx);
  }
  std::vector<Word> words;
  for (auto idx : chosen) words.push_back(space.at(idx));
  return Codebook{std::move(words)};
}

}  // namespace fll
