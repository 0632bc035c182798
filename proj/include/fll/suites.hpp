#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fll/anticodes.hpp"
#include "fll/average.hpp"
#include "fll/balls.hpp"
#include "fll/codes.hpp"
#include "fll/extremal.hpp"
#include "fll/lcs.hpp"
#include "fll/parallel.hpp"
#include "fll/report.hpp"
#include "fll/spheres.hpp"
#include "fll/word.hpp"

namespace fll {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ball-formula", "extremal",      "average",
                                              "anticodes",    "codes",         "metric-axioms",
                                              "intersections"};
  return names;
}

// Key/value suite parameters. "workers" and "max_space" control execution
// only and are never echoed into the report.
class SuiteParams {
 public:
  SuiteParams() = default;
  SuiteParams(std::initializer_list<std::pair<const std::string, std::string>> init)
      : values_{init} {}
  explicit SuiteParams(std::map<std::string, std::string> values) : values_{std::move(values)} {}

  // Parses "key=value".
  void set(std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw UsageError("expected key=value, got '" + std::string(assignment) + "'");
    }
    values_[std::string(assignment.substr(0, eq))] = std::string(assignment.substr(eq + 1));
  }
  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  void set(const std::string& key, std::uint64_t value) { values_[key] = std::to_string(value); }

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::map<std::string, std::string>& values() const noexcept { return values_; }

  std::uint64_t get(const std::string& key, std::uint64_t fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::logic_error&) {
      throw UsageError("parameter " + key + " must be a non-negative integer, got '" +
                       it->second + "'");
    }
  }

 private:
  std::map<std::string, std::string> values_;
};

namespace detail {

inline std::string join_words(const std::vector<Word>& words) {
  std::string out = "{";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ",";
    out += to_string(words[i]);
  }
  return out + "}";
}

inline std::string tag(std::string_view name, std::initializer_list<std::pair<const char*, std::uint64_t>> args) {
  std::string out{name};
  out += "[";
  bool first = true;
  for (const auto& [k, v] : args) {
    if (!first) out += ",";
    out += std::string(k) + "=" + std::to_string(v);
    first = false;
  }
  return out + "]";
}

inline CheckStatus status_of(bool ok) { return ok ? CheckStatus::kPass : CheckStatus::kFail; }

inline Check equality_check(std::string name, const std::string& expected, const std::string& actual) {
  return {std::move(name), expected, actual, status_of(expected == actual), std::nullopt};
}

// Resolved parameters for one suite run.
class SuiteContext {
 public:
  SuiteContext(const SuiteParams& params, std::map<std::string, std::uint64_t> defaults)
      : params_{params}, defaults_{std::move(defaults)} {
    for (const auto& [k, v] : params.values()) {
      if (k == "workers" || k == "max_space") continue;
      if (!defaults_.count(k)) throw UsageError("unknown parameter '" + k + "' for this suite");
    }
    workers = static_cast<unsigned>(params.get("workers", 1));
    max_space = params.get("max_space", WordSpace::kDefaultMaxSpace);
  }

  std::uint64_t operator[](const std::string& key) const {
    return params_.get(key, defaults_.at(key));
  }

  std::map<std::string, std::string> echoed() const {
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : defaults_) out[k] = std::to_string((*this)[k]);
    return out;
  }

  void require_space(std::size_t n, std::size_t m) const {
    const WordSpace space{n, Alphabet{m}};
    try {
      space.require_within(max_space);
    } catch (const CapacityError&) {
      throw CapacityError("m^n = " + std::to_string(m) + "^" + std::to_string(n) +
                          " exceeds max_space " + std::to_string(max_space) +
                          " (violating parameter: n_max)");
    }
  }

  unsigned workers = 1;
  std::uint64_t max_space = WordSpace::kDefaultMaxSpace;

 private:
  const SuiteParams& params_;
  std::map<std::string, std::uint64_t> defaults_;
};

inline void require_alphabet(std::uint64_t m) {
  if (m < 2) throw UsageError("parameter m must be >= 2");
}

// |L_1| closed form against the LCS-filter oracle for every word.
inline void suite_ball_formula(const SuiteContext& ctx, VerificationReport& r) {
  const std::size_t m = ctx["m"];
  require_alphabet(m);
  ctx.require_space(ctx["n_max"], m);
  for (std::size_t n = std::max<std::size_t>(1, ctx["n_min"]); n <= ctx["n_max"]; ++n) {
    ctx.require_space(n, m);
    const WordSpace space{n, Alphabet{m}};
    const auto sizes = oracle_ball_sizes(n, Alphabet{m}, 1, ctx.max_space, ctx.workers);
    std::size_t agree = 0;
    std::string first_mismatch;
    for (std::uint64_t i = 0; i < sizes.size(); ++i) {
      const Word x = space.at(i);
      const auto closed = fll_ball1_size_closed_form(x);
      if (closed == static_cast<std::int64_t>(sizes[i])) {
        ++agree;
      } else if (first_mismatch.empty()) {
        first_mismatch = "; first mismatch " + to_string(x) + ": closed " +
                         std::to_string(closed) + ", oracle " + std::to_string(sizes[i]);
      }
    }
    const std::string total = std::to_string(sizes.size());
    r.checks.push_back(equality_check(tag("closed_form_vs_oracle", {{"m", m}, {"n", n}}),
                                      total + "/" + total + " words agree",
                                      std::to_string(agree) + "/" + total + " words agree" +
                                          first_mismatch));
  }
}

inline void suite_extremal(const SuiteContext& ctx, VerificationReport& r) {
  const std::size_t m = ctx["m"];
  require_alphabet(m);
  ctx.require_space(ctx["n_max"], m);
  for (std::size_t n = std::max<std::size_t>(1, ctx["n_min"]); n <= ctx["n_max"]; ++n) {
    ctx.require_space(n, m);
    const Alphabet alphabet{m};
    const WordSpace space{n, alphabet};
    const auto sizes = oracle_ball_sizes(n, alphabet, 1, ctx.max_space, ctx.workers);
    const SweepExtremes ext = sweep_extremes(space, sizes);

    std::vector<Word> constants;
    for (Symbol s = 0; s < m; ++s) constants.push_back(constant_word(n, s, alphabet));
    r.checks.push_back(equality_check(tag("min_value", {{"m", m}, {"n", n}}),
                                      std::to_string(hamming_ball_size(n, m, 1)),
                                      std::to_string(ext.min)));
    // For n = 1 every word is constant and every ball is all of Z_m.
    r.checks.push_back(equality_check(tag("min_argmin", {{"m", m}, {"n", n}}),
                                      join_words(constants), join_words(ext.argmin)));

    if (m == 2) {
      const ExtremalResult best = max_ball_size_binary(n);
      r.checks.push_back(equality_check(tag("max_value", {{"m", m}, {"n", n}}),
                                        std::to_string(best.value), std::to_string(ext.max)));
      std::vector<Word> balanced;
      for (std::uint64_t i = 0; i < space.size(); ++i) {
        const Word x = space.at(i);
        for (std::size_t alpha : best.alpha_set) {
          if (is_alpha_balanced(x, alpha)) {
            balanced.push_back(x);
            break;
          }
        }
      }
      r.checks.push_back(equality_check(tag("max_argmax_is_balanced", {{"m", m}, {"n", n}}),
                                        join_words(balanced), join_words(ext.argmax)));
      std::size_t consistent = 0;
      for (std::size_t alpha = 1; alpha <= n; ++alpha) {
        const Word w = balanced_word(n, alpha);
        consistent += is_alpha_balanced(w, alpha) &&
                      fll_ball1_size_closed_form(w) == balanced_ball_size(n, alpha);
      }
      r.checks.push_back(equality_check(tag("balanced_word_closed_form", {{"n", n}}),
                                        std::to_string(n) + "/" + std::to_string(n),
                                        std::to_string(consistent) + "/" + std::to_string(n)));
    } else {
      r.checks.push_back(equality_check(tag("max_value", {{"m", m}, {"n", n}}),
                                        std::to_string(max_ball_size_nonbinary(n, m)),
                                        std::to_string(ext.max)));
      const auto shaped = std::count_if(ext.argmax.begin(), ext.argmax.end(), has_nonbinary_max_shape);
      const std::string total = std::to_string(ext.argmax.size());
      r.checks.push_back(equality_check(tag("max_argmax_shape", {{"m", m}, {"n", n}}),
                                        total + "/" + total + " maximizers have n runs and x_i != x_{i+2}",
                                        std::to_string(shaped) + "/" + total +
                                            " maximizers have n runs and x_i != x_{i+2}"));
      const Word center = max_center_nonbinary(n, m);
      r.checks.push_back(equality_check(
          tag("max_center", {{"m", m}, {"n", n}}), std::to_string(ext.max),
          std::to_string(sizes[space.index_of(center)])));
    }
  }

  if (m == 2) {
    const std::size_t formula_n_max = ctx["formula_n_max"];
    std::size_t total = 0, agree = 0, boundary = 0, boundary_equal = 0;
    std::string first_bad;
    for (std::size_t n = 2; n <= formula_n_max; ++n) {
      for (std::size_t alpha = 2; alpha <= n; ++alpha) {
        const auto hi = balanced_ball_size(n, alpha);
        const auto lo = balanced_ball_size(n, alpha - 1);
        ++total;
        if (crossover_predicate(n, alpha) == (hi > lo)) {
          ++agree;
        } else if (first_bad.empty()) {
          first_bad = "; first disagreement n=" + std::to_string(n) + " alpha=" + std::to_string(alpha);
        }
        if (n == 2 * (alpha - 1) * alpha) {
          ++boundary;
          boundary_equal += hi == lo;
        }
      }
    }
    r.checks.push_back(equality_check(
        tag("crossover_biconditional", {{"n_max", formula_n_max}}),
        std::to_string(total) + "/" + std::to_string(total),
        std::to_string(agree) + "/" + std::to_string(total) + first_bad));
    r.checks.push_back(equality_check(
        tag("crossover_boundary_equality", {{"n_max", formula_n_max}}),
        std::to_string(boundary) + "/" + std::to_string(boundary),
        std::to_string(boundary_equal) + "/" + std::to_string(boundary)));

    std::size_t selector_ok = 0;
    std::string first_sel;
    for (std::size_t n = 1; n <= formula_n_max; ++n) {
      std::int64_t best = 0;
      std::vector<std::size_t> arg;
      for (std::size_t alpha = 1; alpha <= n; ++alpha) {
        const auto v = balanced_ball_size(n, alpha);
        if (arg.empty() || v > best) {
          best = v;
          arg = {alpha};
        } else if (v == best) {
          arg.push_back(alpha);
        }
      }
      if (arg == t_selector(n)) {
        ++selector_ok;
      } else if (first_sel.empty()) {
        first_sel = "; first disagreement n=" + std::to_string(n);
      }
    }
    r.checks.push_back(equality_check(
        tag("t_selector_is_argmax", {{"n_max", formula_n_max}}),
        std::to_string(formula_n_max) + "/" + std::to_string(formula_n_max),
        std::to_string(selector_ok) + "/" + std::to_string(formula_n_max) + first_sel));
  }
}

inline void suite_average(const SuiteContext& ctx, VerificationReport& r) {
  const std::size_t m = ctx["m"];
  require_alphabet(m);
  ctx.require_space(ctx["n_max"], m);
  const OracleOptions oracle{ctx.max_space, ctx.workers};
  for (std::size_t n = std::max<std::size_t>(2, ctx["n_min"]); n <= ctx["n_max"]; ++n) {
    ctx.require_space(n, m);
    const ExpectationReport report = expectation_report(n, m, oracle);
    for (const ExpectationEntry& e : report.entries) {
      const bool exact_required =
          e.quantity != Quantity::kSumSiSq && e.quantity != Quantity::kBall1;
      CheckStatus status = CheckStatus::kPass;
      if (e.delta != 0) status = exact_required ? CheckStatus::kFail : CheckStatus::kDocumentedDelta;
      r.checks.push_back({tag("E[" + std::string(quantity_name(e.quantity)) + "]", {{"m", m}, {"n", n}}),
                          to_string(e.closed), to_string(e.oracle), status, to_string(e.delta)});
    }
    // Three routes to the mean ball size: LCS filter, closed form, and the
    // per-word linear expansion.
    const Rational closed_mean = average_of_closed_form(n, m, oracle);
    const Rational expansion_mean = detail::enumerate_mean(n, m, oracle, [](const Word& x) {
      const SegmentProfile p = alternating_segments(x);
      const auto nn = static_cast<std::int64_t>(x.size());
      const auto mm = static_cast<std::int64_t>(x.m());
      std::int64_t sum = 0, sum_sq = 0;
      for (auto s : p.lengths) {
        sum += static_cast<std::int64_t>(s);
        sum_sq += static_cast<std::int64_t>(s * s);
      }
      // Twice the expansion keeps everything integral.
      const std::int64_t twice = 2 * static_cast<std::int64_t>(p.rho) * (nn * (mm - 1) - 1) + 4 -
                                 sum_sq + 3 * sum - 2 * static_cast<std::int64_t>(p.a());
      return twice;
    }) / 2;
    const std::string oracle_mean = to_string(report[Quantity::kBall1].oracle);
    r.checks.push_back(equality_check(tag("ball1_mean_closed_form_vs_oracle", {{"m", m}, {"n", n}}),
                                      oracle_mean, to_string(closed_mean)));
    r.checks.push_back(equality_check(tag("ball1_mean_expansion_vs_oracle", {{"m", m}, {"n", n}}),
                                      oracle_mean, to_string(expansion_mean)));
  }
}

inline void suite_anticodes(const SuiteContext& ctx, VerificationReport& r) {
  GraphOptions graph_options{std::min(ctx.max_space, GraphOptions{}.max_vertices), ctx.workers};
  if (!(WordSpace{ctx["n_max"], Alphabet{2}}.size() <= graph_options.max_vertices)) {
    throw CapacityError("2^n_max exceeds the clique-search cap " + std::to_string(graph_options.max_vertices) +
                        " (violating parameter: n_max)");
  }
  for (std::size_t n = std::max<std::size_t>(1, ctx["n_min"]); n <= ctx["n_max"]; ++n) {
    const auto codes = enumerate_maximal_anticodes(n, 2, 1, graph_options);
    const AnticodeSizeSummary summary = summarize_anticodes(codes);

    if (n > 1) {
      r.checks.push_back(equality_check(tag("max_size", {{"n", n}}), std::to_string(n + 1),
                                        std::to_string(summary.max)));
    }
    if (n > 2) {
      r.checks.push_back(
          equality_check(tag("min_size", {{"n", n}}), "4", std::to_string(summary.min)));
    } else {
      r.checks.push_back({tag("min_size_unasserted", {{"n", n}}), "not asserted for n <= 2",
                          std::to_string(summary.min), CheckStatus::kPass, std::nullopt});
    }

    const AnticodeSet weight = weight_le_one_anticode(n);
    const bool weight_ok = weight.size() == n + 1 && is_anticode(weight.words, 1) &&
                           is_maximal_anticode(weight.words, 1, ctx.max_space);
    r.checks.push_back(equality_check(tag("weight_le_one_is_maximal", {{"n", n}}),
                                      "maximal anticode of size " + std::to_string(n + 1),
                                      weight_ok ? "maximal anticode of size " + std::to_string(n + 1)
                                                : "not a maximal anticode of size " + std::to_string(n + 1)));

    const std::string all = std::to_string(codes.size()) + "/" + std::to_string(codes.size());
    auto count_of = [&](auto pred) {
      return std::to_string(std::count_if(codes.begin(), codes.end(), pred)) + "/" +
             std::to_string(codes.size());
    };
    r.checks.push_back(equality_check(tag("cliques_are_maximal_anticodes", {{"n", n}}), all,
                                      count_of([&](const AnticodeSet& a) {
                                        return is_maximal_anticode(a.words, 1, ctx.max_space);
                                      })));
    if (n >= 2) {
      r.checks.push_back(equality_check(tag("suffix_00_property", {{"n", n}}), all,
                                        count_of([](const AnticodeSet& a) {
                                          return suffix_00_property_holds(a.words);
                                        })));
      r.checks.push_back(equality_check(tag("suffix_01_property", {{"n", n}}), all,
                                        count_of([](const AnticodeSet& a) {
                                          return suffix_01_property_holds(a.words);
                                        })));
      r.checks.push_back(equality_check(tag("shared_prefix_property", {{"n", n}}), all,
                                        count_of([](const AnticodeSet& a) {
                                          return shared_prefix_property_holds(a.words);
                                        })));
      // Sub-anticodes selected by last symbol, and by alternating suffix.
      r.checks.push_back(equality_check(tag("puncture_common_last_symbol", {{"n", n}}), all,
                                        count_of([](const AnticodeSet& a) {
                                          for (Symbol s = 0; s < 2; ++s) {
                                            std::vector<Word> sub;
                                            for (const Word& w : a.words) {
                                              if (w.symbols().back() == s) sub.push_back(w);
                                            }
                                            if (!sub.empty() && !puncture_preserves(sub)) return false;
                                          }
                                          return true;
                                        })));
      r.checks.push_back(equality_check(tag("puncture_alternating_suffix", {{"n", n}}), all,
                                        count_of([](const AnticodeSet& a) {
                                          std::vector<Word> sub;
                                          for (const Word& w : a.words) {
                                            if (has_suffix(w, 0, 1) || has_suffix(w, 1, 0)) sub.push_back(w);
                                          }
                                          return sub.empty() || puncture_preserves(sub);
                                        })));
      std::size_t maximum = 0, with00 = 0, with11 = 0, with_both = 0;
      for (const auto& a : codes) {
        if (a.size() != summary.max) continue;
        ++maximum;
        const bool h00 = count_suffix(a.words, 0, 0) > 0;
        const bool h11 = count_suffix(a.words, 1, 1) > 0;
        with00 += h00;
        with11 += h11;
        with_both += h00 && h11;
      }
      r.checks.push_back({tag("maximum_anticode_suffix_statistics", {{"n", n}}), "recorded",
                          std::to_string(maximum) + " maximum anticodes: " + std::to_string(with00) +
                              " contain a word ending 00, " + std::to_string(with11) +
                              " ending 11, " + std::to_string(with_both) + " both",
                          CheckStatus::kPass, std::nullopt});
    }
    r.checks.push_back({tag("maximal_anticode_count", {{"n", n}}), "recorded",
                        std::to_string(summary.count), CheckStatus::kPass, std::nullopt});
  }
}

// Equivalence tallies for one code family.
struct CodeTally {
  std::uint64_t codes = 0;
  std::uint64_t budget_checks = 0;
  std::uint64_t budget_agree = 0;
  std::uint64_t profile_checks = 0;
  std::uint64_t profile_agree = 0;
  std::string first_bad;

  CodeTally& operator+=(const CodeTally& o) {
    codes += o.codes;
    budget_checks += o.budget_checks;
    budget_agree += o.budget_agree;
    profile_checks += o.profile_checks;
    profile_agree += o.profile_agree;
    if (first_bad.empty()) first_bad = o.first_bad;
    return *this;
  }
};

// Evaluates every formulation of "corrects s errors" on one code, through
// the public predicates.
inline void tally_code(const Codebook& c, std::size_t t_max, CodeTally& tally) {
  ++tally.codes;
  const std::size_t n = c.length();
  const std::size_t dmin = min_fll_distance(c);
  for (std::size_t s = 0; s <= std::min(t_max, n); ++s) {
    std::vector<bool> answers{is_t_deletion_correcting(c, s), is_t_deletion_correcting_by_spheres(c, s),
                              is_t_insertion_correcting(c, s), dmin >= s + 1};
    for (std::size_t t1 = 0; t1 <= s; ++t1) answers.push_back(is_del_ins_correcting(c, t1, s - t1));
    ++tally.budget_checks;
    if (std::all_of(answers.begin(), answers.end(), [&](bool b) { return b == answers.front(); })) {
      ++tally.budget_agree;
    } else if (tally.first_bad.empty()) {
      tally.first_bad = "; first disagreement " + detail::join_words(c.words()) + " budget " + std::to_string(s);
    }
  }
  for (std::size_t t = 0; 2 * t + 1 <= std::min(t_max, n); ++t) {
    const bool profile = correct_and_detect_profile(c, t);
    ++tally.profile_checks;
    if (profile == is_t_deletion_correcting(c, 2 * t + 1) && profile == (dmin >= 2 * t + 2)) {
      ++tally.profile_agree;
    } else if (tally.first_bad.empty()) {
      tally.first_bad = "; first profile disagreement " + detail::join_words(c.words()) + " t " + std::to_string(t);
    }
  }
}

// All two-codeword codes of Z_m^n with per-word spheres computed once.
inline CodeTally tally_all_pairs(std::size_t n, std::size_t m, std::size_t t_max, unsigned workers) {
  const WordSpace space{n, Alphabet{m}};
  const std::vector<Word> words = space.all();
  const std::size_t s_max = std::min(t_max, n);
  struct Spheres {
    std::vector<WordSet> del, ins;
    std::vector<std::vector<WordSet>> di;  // di[s][t1]
  };
  const std::vector<Spheres> spheres = parallel_map(words.size(), workers, [&](std::uint64_t i) {
    Spheres sp;
    sp.di.resize(s_max + 1);
    for (std::size_t s = 0; s <= s_max; ++s) {
      sp.del.push_back(deletion_sphere(words[i], s));
      sp.ins.push_back(insertion_sphere(words[i], s));
      for (std::size_t t1 = 0; t1 <= s; ++t1) sp.di[s].push_back(del_ins_sphere(words[i], {t1, s - t1}));
    }
    return sp;
  });
  return parallel_reduce(
      words.size(), workers, CodeTally{},
      [&](std::uint64_t begin, std::uint64_t end) {
        CodeTally tally;
        for (std::uint64_t i = begin; i < end; ++i) {
          for (std::uint64_t j = i + 1; j < words.size(); ++j) {
            ++tally.codes;
            const std::size_t common = llcs(words[i], words[j]);
            const std::size_t d = n - common;
            for (std::size_t s = 0; s <= s_max; ++s) {
              std::vector<bool> answers{common + s < n, disjoint(spheres[i].del[s], spheres[j].del[s]),
                                        disjoint(spheres[i].ins[s], spheres[j].ins[s]), d >= s + 1};
              for (std::size_t t1 = 0; t1 <= s; ++t1) {
                answers.push_back(disjoint(spheres[i].di[s][t1], spheres[j].di[s][t1]));
              }
              ++tally.budget_checks;
              if (std::all_of(answers.begin(), answers.end(), [&](bool b) { return b == answers.front(); })) {
                ++tally.budget_agree;
              } else if (tally.first_bad.empty()) {
                tally.first_bad = "; first disagreement {" + to_string(words[i]) + "," +
                                  to_string(words[j]) + "} budget " + std::to_string(s);
              }
            }
            for (std::size_t t = 0; 2 * t + 1 <= s_max; ++t) {
              const Codebook c{{words[i], words[j]}};
              const bool profile = correct_and_detect_profile(c, t);
              ++tally.profile_checks;
              if (profile == (common + 2 * t + 1 < n) && profile == (d >= 2 * t + 2)) {
                ++tally.profile_agree;
              } else if (tally.first_bad.empty()) {
                tally.first_bad = "; first profile disagreement {" + to_string(words[i]) + "," +
                                  to_string(words[j]) + "} t " + std::to_string(t);
              }
            }
          }
        }
        return tally;
      },
      [](CodeTally a, const CodeTally& b) { return a += b; });
}

inline void push_tally(VerificationReport& r, const std::string& family, const CodeTally& tally) {
  r.checks.push_back(equality_check(
      family + ".budget_equivalence",
      std::to_string(tally.budget_checks) + "/" + std::to_string(tally.budget_checks),
      std::to_string(tally.budget_agree) + "/" + std::to_string(tally.budget_checks) + tally.first_bad));
  r.checks.push_back(equality_check(
      family + ".correct_and_detect",
      std::to_string(tally.profile_checks) + "/" + std::to_string(tally.profile_checks),
      std::to_string(tally.profile_agree) + "/" + std::to_string(tally.profile_checks) + tally.first_bad));
}

inline void suite_codes(const SuiteContext& ctx, VerificationReport& r) {
  const std::size_t m = ctx["m"];
  require_alphabet(m);
  ctx.require_space(ctx["n_max"], m);
  const std::size_t t_max = ctx["t_max"];
  for (std::size_t n = 1; n <= ctx["n_max"]; ++n) {
    ctx.require_space(n, m);
    push_tally(r, tag("pairs", {{"m", m}, {"n", n}}), tally_all_pairs(n, m, t_max, ctx.workers));
  }

  const std::size_t trials = ctx["trials"];
  const std::size_t random_n_max = ctx["random_n_max"];
  const std::size_t size_max = ctx["random_size_max"];
  if (trials == 0) return;
  if (random_n_max < 1) throw UsageError("random_n_max must be >= 1");
  if (size_max < 2) throw UsageError("random_size_max must be >= 2");
  ctx.require_space(random_n_max, m);
  std::mt19937_64 rng{r.seed.value_or(0)};
  std::vector<Codebook> codes;
  codes.reserve(trials);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    // Smallest length with at least two words.
    std::size_t n_lo = 1;
    while (WordSpace{n_lo, Alphabet{m}}.size() < 2) ++n_lo;
    std::uniform_int_distribution<std::size_t> pick_n(std::min(n_lo, random_n_max), random_n_max);
    const std::size_t n = pick_n(rng);
    const std::uint64_t cap = std::min<std::uint64_t>(size_max, WordSpace{n, Alphabet{m}}.size());
    std::uniform_int_distribution<std::size_t> pick_size(2, static_cast<std::size_t>(cap));
    codes.push_back(random_codebook(n, m, pick_size(rng), rng));
  }
  const CodeTally tally = parallel_reduce(
      codes.size(), ctx.workers, CodeTally{},
      [&](std::uint64_t begin, std::uint64_t end) {
        CodeTally t;
        for (std::uint64_t i = begin; i < end; ++i) tally_code(codes[i], t_max, t);
        return t;
      },
      [](CodeTally a, const CodeTally& b) { return a += b; });
  push_tally(r, tag("random", {{"m", m}, {"trials", trials}}), tally);
}

inline void suite_metric_axioms(const SuiteContext& ctx, VerificationReport& r) {
  const std::size_t m = ctx["m"];
  require_alphabet(m);
  ctx.require_space(ctx["n_max"], m);
  for (std::size_t n = std::max<std::size_t>(1, ctx["n_min"]); n <= ctx["n_max"]; ++n) {
    ctx.require_space(n, m);
    const WordSpace space{n, Alphabet{m}};
    const std::vector<Word> words = space.all(ctx.max_space);
    const std::size_t v = words.size();
    const auto dist = parallel_map(v, ctx.workers, [&](std::uint64_t i) {
      std::vector<std::uint8_t> row(v);
      for (std::size_t j = 0; j < v; ++j) row[j] = static_cast<std::uint8_t>(fll_distance(words[i], words[j]));
      return row;
    });

    std::uint64_t symmetric = 0, identity = 0;
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = 0; j < v; ++j) {
        symmetric += dist[i][j] == dist[j][i];
        identity += (dist[i][j] == 0) == (i == j);
      }
    }
    const std::string pairs = std::to_string(v * v);
    r.checks.push_back(equality_check(tag("symmetry", {{"m", m}, {"n", n}}), pairs + "/" + pairs,
                                      std::to_string(symmetric) + "/" + pairs));
    r.checks.push_back(equality_check(tag("identity", {{"m", m}, {"n", n}}), pairs + "/" + pairs,
                                      std::to_string(identity) + "/" + pairs));

    const std::uint64_t violations = parallel_reduce(
        v, ctx.workers, std::uint64_t{0},
        [&](std::uint64_t begin, std::uint64_t end) {
          std::uint64_t bad = 0;
          for (std::uint64_t i = begin; i < end; ++i) {
            for (std::size_t j = 0; j < v; ++j) {
              for (std::size_t k = 0; k < v; ++k) bad += dist[i][k] > dist[i][j] + dist[j][k];
            }
          }
          return bad;
        },
        [](std::uint64_t a, std::uint64_t b) { return a + b; });
    r.checks.push_back(equality_check(tag("triangle_inequality_violations", {{"m", m}, {"n", n}}), "0",
                                      std::to_string(violations)));

    if (n <= ctx["bfs_n_max"]) {
      const auto bfs_rows = parallel_map(v, ctx.workers, [&](std::uint64_t src) {
        std::vector<std::uint8_t> level(v, 0xFF);
        std::vector<std::size_t> queue{static_cast<std::size_t>(src)};
        level[src] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          const std::size_t u = queue[head];
          for (std::size_t w = 0; w < v; ++w) {
            if (dist[u][w] == 1 && level[w] == 0xFF) {
              level[w] = static_cast<std::uint8_t>(level[u] + 1);
              queue.push_back(w);
            }
          }
        }
        return level;
      });
      std::uint64_t agree = 0;
      for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) agree += bfs_rows[i][j] == dist[i][j];
      }
      r.checks.push_back(equality_check(tag("graph_distance_equals_fll", {{"m", m}, {"n", n}}),
                                        pairs + "/" + pairs, std::to_string(agree) + "/" + pairs));
    }

    if (n <= ctx["duality_n_max"]) {
      const auto spheres = parallel_map(v, ctx.workers, [&](std::uint64_t i) {
        std::vector<WordSet> by_t;
        for (std::size_t t = 0; t <= n; ++t) by_t.push_back(deletion_sphere(words[i], t));
        return by_t;
      });
      std::uint64_t checks = 0, agree = 0, eq2 = 0;
      for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = i; j < v; ++j) {
          const std::size_t common = llcs(words[i], words[j]);
          std::size_t first_meet = n + 1;
          for (std::size_t t = 0; t <= n; ++t) {
            const bool empty = disjoint(spheres[i][t], spheres[j][t]);
            ++checks;
            agree += empty == (common + t < n);
            if (!empty && first_meet > n) first_meet = t;
          }
          eq2 += first_meet == dist[i][j];
        }
      }
      const std::uint64_t upper = v * (v + 1) / 2;
      r.checks.push_back(equality_check(tag("deletion_sphere_duality", {{"m", m}, {"n", n}}),
                                        std::to_string(checks) + "/" + std::to_string(checks),
                                        std::to_string(agree) + "/" + std::to_string(checks)));
      r.checks.push_back(equality_check(tag("distance_is_first_sphere_meeting", {{"m", m}, {"n", n}}),
                                        std::to_string(upper) + "/" + std::to_string(upper),
                                        std::to_string(eq2) + "/" + std::to_string(upper)));
    }
  }
}

inline void suite_intersections(const SuiteContext& ctx, VerificationReport& r) {
  const std::size_t m = ctx["m"];
  require_alphabet(m);
  ctx.require_space(ctx["n_max"], m);
  std::size_t witnesses_d = 0, witnesses_i = 0;
  for (std::size_t n = std::max<std::size_t>(1, ctx["n_min"]); n <= ctx["n_max"]; ++n) {
    ctx.require_space(n, m);
    const std::vector<Word> words = WordSpace{n, Alphabet{m}}.all(ctx.max_space);
    struct Pair {
      WordSet del, ins;
    };
    const auto spheres = parallel_map(words.size(), ctx.workers, [&](std::uint64_t i) {
      return Pair{deletion_sphere(words[i], 1), insertion_sphere(words[i], 1)};
    });
    struct Max {
      std::size_t d = 0, i = 0, d_hits = 0, i_hits = 0;
    };
    const Max mx = parallel_reduce(
        words.size(), ctx.workers, Max{},
        [&](std::uint64_t begin, std::uint64_t end) {
          Max out;
          for (std::uint64_t a = begin; a < end; ++a) {
            for (std::size_t b = a + 1; b < words.size(); ++b) {
              const std::size_t d = intersection_size(spheres[a].del, spheres[b].del);
              const std::size_t i = intersection_size(spheres[a].ins, spheres[b].ins);
              out.d = std::max(out.d, d);
              out.i = std::max(out.i, i);
              out.d_hits += d == 2;
              out.i_hits += i == 2;
            }
          }
          return out;
        },
        [](Max a, const Max& b) {
          return Max{std::max(a.d, b.d), std::max(a.i, b.i), a.d_hits + b.d_hits, a.i_hits + b.i_hits};
        });
    witnesses_d += mx.d_hits;
    witnesses_i += mx.i_hits;
    const bool binary = m == 2;
    r.checks.push_back({tag("max_deletion_intersection", {{"m", m}, {"n", n}}), binary ? "<= 2" : "recorded",
                        std::to_string(mx.d), binary ? status_of(mx.d <= 2) : CheckStatus::kPass, std::nullopt});
    r.checks.push_back({tag("max_insertion_intersection", {{"m", m}, {"n", n}}), binary ? "<= 2" : "recorded",
                        std::to_string(mx.i), binary ? status_of(mx.i <= 2) : CheckStatus::kPass, std::nullopt});
  }
  if (ctx["n_max"] >= 2) {
    r.checks.push_back({"bound_attained.deletion", "> 0 pairs with intersection 2",
                        std::to_string(witnesses_d) + " pairs", status_of(witnesses_d > 0), std::nullopt});
    r.checks.push_back({"bound_attained.insertion", "> 0 pairs with intersection 2",
                        std::to_string(witnesses_i) + " pairs", status_of(witnesses_i > 0), std::nullopt});
  }
}

}  // namespace detail

namespace detail {

using SuiteBody = void (*)(const SuiteContext&, VerificationReport&);

struct SuiteEntry {
  std::map<std::string, std::uint64_t> defaults;
  SuiteBody body;
  bool seeded = false;
};

inline const std::map<std::string, SuiteEntry, std::less<>>& suite_table() {
  static const std::map<std::string, SuiteEntry, std::less<>> table{
      {"ball-formula", {{{"m", 2}, {"n_min", 1}, {"n_max", 8}}, suite_ball_formula}},
      {"extremal", {{{"m", 2}, {"n_min", 1}, {"n_max", 8}, {"formula_n_max", 200}}, suite_extremal}},
      {"average", {{{"m", 2}, {"n_min", 2}, {"n_max", 8}}, suite_average}},
      {"anticodes", {{{"n_min", 3}, {"n_max", 8}}, suite_anticodes}},
      {"codes",
       {{{"m", 2}, {"n_max", 7}, {"t_max", 3}, {"trials", 500}, {"random_n_max", 8}, {"random_size_max", 8}, {"seed", 1}},
        suite_codes,
        true}},
      {"metric-axioms",
       {{{"m", 2}, {"n_min", 1}, {"n_max", 8}, {"bfs_n_max", 7}, {"duality_n_max", 7}}, suite_metric_axioms}},
      {"intersections", {{{"m", 2}, {"n_min", 1}, {"n_max", 10}}, suite_intersections}},
  };
  return table;
}

inline const SuiteEntry& find_suite(std::string_view name) {
  const auto& table = suite_table();
  const auto it = table.find(name);
  if (it == table.end()) {
    std::string known;
    for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
    throw UsageError("unknown suite '" + std::string(name) + "' (known: " + known + ")");
  }
  return it->second;
}

}  // namespace detail

// Parameters a suite accepts, with their defaults. "workers" and "max_space"
// are accepted everywhere in addition.
inline std::map<std::string, std::uint64_t> suite_defaults(std::string_view name) {
  return detail::find_suite(name).defaults;
}

// Runs one named verification suite. Unknown names and parameters throw
// UsageError; oversize word spaces throw CapacityError.
inline VerificationReport run_suite(std::string_view name, const SuiteParams& params = {}) {
  const detail::SuiteEntry& entry = detail::find_suite(name);
  const detail::SuiteContext ctx{params, entry.defaults};

  VerificationReport report;
  report.suite = std::string(name);
  report.parameters = ctx.echoed();
  if (entry.seeded) {
    report.seed = ctx["seed"];
    report.parameters.erase("seed");
  }
  const auto start = std::chrono::steady_clock::now();
  entry.body(ctx, report);
  report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace fll
