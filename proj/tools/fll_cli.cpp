// Command-line front end for the fll library.
//
// Exit codes: 0 success (verification reports with only pass and
// documented-delta checks), 1 a failed check or a negative predicate,
// 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fll/fll.hpp"

namespace {

using nlohmann::json;

struct Globals {
  std::size_t m = 2;
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> seed;
  unsigned workers = 0;
  std::uint64_t max_space = fll::WordSpace::kDefaultMaxSpace;
  std::string format;
  std::string out;
};

fll::ReportFormat format_or(const Globals& g, fll::ReportFormat fallback) {
  return g.format.empty() ? fallback : fll::parse_report_format(g.format);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw fll::UsageError("cannot open --out file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string csv_row(std::initializer_list<std::string> fields) {
  std::string out;
  for (const auto& f : fields) {
    if (!out.empty()) out += ",";
    out += f;
  }
  return out + "\n";
}

json words_json(const std::vector<fll::Word>& words) {
  json arr = json::array();
  for (const auto& w : words) arr.push_back(fll::to_string(w));
  return arr;
}

json words_json(const fll::WordSet& words) {
  return words_json(std::vector<fll::Word>(words.begin(), words.end()));
}

int cmd_dist(const Globals& g, const std::string& xs, const std::string& ys) {
  const fll::Word x = fll::parse_word(xs, g.m);
  const fll::Word y = fll::parse_word(ys, g.m);
  const fll::DistanceResult r = fll::distance_result(x, y);
  Output out{g.out};
  switch (format_or(g, fll::ReportFormat::kText)) {
    case fll::ReportFormat::kJson:
      out.stream() << json{{"x", xs}, {"y", ys}, {"n", r.n}, {"llcs", r.llcs}, {"distance", r.distance}}.dump(2)
                   << "\n";
      break;
    case fll::ReportFormat::kCsv:
      out.stream() << csv_row({"x", "y", "n", "llcs", "distance"})
                   << csv_row({xs, ys, std::to_string(r.n), std::to_string(r.llcs), std::to_string(r.distance)});
      break;
    case fll::ReportFormat::kText:
      out.stream() << "distance " << r.distance << "\nllcs " << r.llcs << "\n";
      break;
  }
  return 0;
}

void emit_word_list(const Globals& g, const json& meta, const std::vector<fll::Word>& words, bool list,
                    std::uint64_t size) {
  Output out{g.out};
  switch (format_or(g, fll::ReportFormat::kText)) {
    case fll::ReportFormat::kJson: {
      json j = meta;
      j["size"] = size;
      if (list) j["members"] = words_json(words);
      out.stream() << j.dump(2) << "\n";
      break;
    }
    case fll::ReportFormat::kCsv:
      out.stream() << "word\n";
      for (const auto& w : words) out.stream() << fll::to_string(w) << "\n";
      break;
    case fll::ReportFormat::kText:
      if (list) {
        for (const auto& w : words) out.stream() << fll::to_string(w) << "\n";
      }
      out.stream() << "size " << size << "\n";
      break;
  }
}

int cmd_ball(const Globals& g, const std::string& center, std::size_t radius, bool enumerate,
             const std::string& method) {
  const fll::Word x = fll::parse_word(center, g.m);
  fll::BallOptions options;
  options.materialize = enumerate;
  options.max_space = g.max_space;
  options.workers = g.workers;
  if (method == "bfs") {
    options.method = fll::BallMethod::kBfs;
  } else if (method != "filter") {
    throw fll::UsageError("--method must be filter or bfs");
  }
  const fll::BallResult r = fll::fll_ball(x, radius, options);
  std::vector<fll::Word> members;
  if (r.members) members.assign(r.members->begin(), r.members->end());
  emit_word_list(g, {{"center", center}, {"radius", radius}}, members, enumerate, r.size);
  return 0;
}

int cmd_sphere(const Globals& g, const std::string& center, std::size_t t_del, std::size_t t_ins,
               const std::string& order) {
  const fll::Word x = fll::parse_word(center, g.m);
  fll::WordSet s = order == "del-ins"   ? fll::del_ins_sphere(x, {t_del, t_ins})
                   : order == "ins-del" ? fll::ins_del_sphere(x, {t_del, t_ins})
                                        : throw fll::UsageError("--order must be del-ins or ins-del");
  const std::vector<fll::Word> words(s.begin(), s.end());
  emit_word_list(g, {{"center", center}, {"t_del", t_del}, {"t_ins", t_ins}, {"order", order}}, words, true,
                 words.size());
  return 0;
}

int cmd_extremes(const Globals& g, bool exhaustive) {
  if (!g.n) throw fll::UsageError("extremes needs --n");
  const std::size_t n = *g.n;
  const std::size_t m = g.m;
  if (n < 2) throw fll::UsageError("extremes needs --n >= 2");
  const fll::Alphabet alphabet{m};

  json j{{"n", n}, {"m", m}};
  const auto min_value = static_cast<std::int64_t>(fll::min_ball_size(n, m, 1));
  std::vector<fll::Word> min_centers;
  for (fll::Symbol s = 0; s < m; ++s) min_centers.push_back(fll::constant_word(n, s, alphabet));
  std::int64_t max_value = 0;
  std::vector<fll::Word> max_centers;
  if (m == 2) {
    const fll::ExtremalResult best = fll::max_ball_size_binary(n);
    max_value = best.value;
    j["selector"] = best.alpha_set;
    for (std::size_t alpha : best.alpha_set) max_centers.push_back(fll::balanced_word(n, alpha));
  } else {
    max_value = fll::max_ball_size_nonbinary(n, m);
    max_centers.push_back(fll::max_center_nonbinary(n, m));
  }
  j["min"] = {{"value", min_value}, {"centers", words_json(min_centers)}};
  j["max"] = {{"value", max_value}, {"centers", words_json(max_centers)}};

  bool confirmed = true;
  if (exhaustive) {
    const fll::WordSpace space{n, alphabet};
    const auto sizes = fll::oracle_ball_sizes(n, alphabet, 1, g.max_space, g.workers);
    const fll::SweepExtremes ext = fll::sweep_extremes(space, sizes);
    confirmed = ext.min == min_value && ext.max == max_value && ext.argmin == min_centers;
    if (m > 2) {
      for (const auto& w : ext.argmax) confirmed = confirmed && fll::has_nonbinary_max_shape(w);
    } else {
      for (const auto& w : ext.argmax) {
        bool balanced = false;
        for (std::size_t alpha : j["selector"].get<std::vector<std::size_t>>()) {
          balanced = balanced || fll::is_alpha_balanced(w, alpha);
        }
        confirmed = confirmed && balanced;
      }
    }
    j["exhaustive"] = {{"min", ext.min},
                       {"max", ext.max},
                       {"argmin", words_json(ext.argmin)},
                       {"argmax", words_json(ext.argmax)},
                       {"confirmed", confirmed}};
  }

  Output out{g.out};
  switch (format_or(g, fll::ReportFormat::kText)) {
    case fll::ReportFormat::kJson: out.stream() << j.dump(2) << "\n"; break;
    case fll::ReportFormat::kCsv:
      out.stream() << "quantity,value\n"
                   << "min," << min_value << "\nmax," << max_value << "\n";
      if (exhaustive) out.stream() << "confirmed," << (confirmed ? "true" : "false") << "\n";
      break;
    case fll::ReportFormat::kText: {
      auto& os = out.stream();
      os << "min " << min_value << " at " << fll::detail::join_words(min_centers) << "\n";
      os << "max " << max_value << " at " << fll::detail::join_words(max_centers) << "\n";
      if (m == 2) {
        os << "selector";
        for (auto a : j["selector"]) os << " " << a.get<std::size_t>();
        os << "\n";
      }
      if (exhaustive) {
        os << "exhaustive min " << j["exhaustive"]["min"] << " (" << j["exhaustive"]["argmin"].size()
           << " words), max " << j["exhaustive"]["max"] << " ("
           << j["exhaustive"]["argmax"].size() << " words): " << (confirmed ? "confirmed" : "MISMATCH") << "\n";
      }
      break;
    }
  }
  return confirmed ? 0 : 1;
}

int cmd_average(const Globals& g) {
  if (!g.n) throw fll::UsageError("average needs --n");
  const fll::ExpectationReport r = fll::expectation_report(*g.n, g.m, {g.max_space, g.workers});
  Output out{g.out};
  switch (format_or(g, fll::ReportFormat::kJson)) {
    case fll::ReportFormat::kJson: {
      json q = json::array();
      for (const auto& e : r.entries) {
        q.push_back({{"quantity", fll::quantity_name(e.quantity)},
                     {"closed_form", fll::to_string(e.closed)},
                     {"oracle", fll::to_string(e.oracle)},
                     {"delta", fll::to_string(e.delta)}});
      }
      out.stream() << json{{"n", r.n}, {"m", r.m}, {"quantities", q}}.dump(2) << "\n";
      break;
    }
    case fll::ReportFormat::kCsv:
      out.stream() << "quantity,closed_form,oracle,delta\n";
      for (const auto& e : r.entries) {
        out.stream() << csv_row({std::string(fll::quantity_name(e.quantity)), fll::to_string(e.closed),
                                 fll::to_string(e.oracle), fll::to_string(e.delta)});
      }
      break;
    case fll::ReportFormat::kText:
      for (const auto& e : r.entries) {
        out.stream() << fll::quantity_name(e.quantity) << ": closed " << fll::to_string(e.closed) << ", oracle "
                     << fll::to_string(e.oracle) << ", delta " << fll::to_string(e.delta) << "\n";
      }
      break;
  }
  return 0;
}

int cmd_anticodes(const Globals& g, std::size_t t, bool list) {
  if (!g.n) throw fll::UsageError("anticodes needs --n");
  fll::GraphOptions options;
  options.workers = g.workers;
  const auto codes = fll::enumerate_maximal_anticodes(*g.n, g.m, t, options);
  const fll::AnticodeSizeSummary s = fll::summarize_anticodes(codes);
  Output out{g.out};
  auto line = [](const fll::AnticodeSet& a) {
    std::string row;
    for (const auto& w : a.words) row += (row.empty() ? "" : ",") + fll::to_string(w);
    return row;
  };
  switch (format_or(g, fll::ReportFormat::kText)) {
    case fll::ReportFormat::kJson: {
      json j{{"n", *g.n}, {"m", g.m}, {"t", t}, {"max", s.max}, {"min", s.min}, {"count", s.count}};
      if (list) {
        j["anticodes"] = json::array();
        for (const auto& a : codes) j["anticodes"].push_back(words_json(a.words));
      }
      out.stream() << j.dump(2) << "\n";
      break;
    }
    case fll::ReportFormat::kCsv:
      out.stream() << "max,min,count\n" << s.max << "," << s.min << "," << s.count << "\n";
      break;
    case fll::ReportFormat::kText:
      out.stream() << "max " << s.max << "\nmin " << s.min << "\ncount " << s.count << "\n";
      if (list) {
        for (const auto& a : codes) out.stream() << line(a) << "\n";
      }
      break;
  }
  return 0;
}

int cmd_check_code(const Globals& g, const std::string& path, std::size_t t_del, std::size_t t_ins) {
  std::ifstream in{path};
  if (!in) throw fll::UsageError("cannot read code file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const fll::Codebook c = fll::parse_codebook(buf.str());
  const bool corrects = c.size() < 2 || fll::is_del_ins_correcting(c, t_del, t_ins);
  std::optional<std::size_t> dmin;
  if (c.size() >= 2) dmin = fll::min_fll_distance(c);
  Output out{g.out};
  switch (format_or(g, fll::ReportFormat::kText)) {
    case fll::ReportFormat::kJson: {
      json j{{"n", c.length()},      {"m", c.alphabet().size()}, {"size", c.size()},
             {"t_del", t_del},       {"t_ins", t_ins},           {"corrects", corrects},
             {"min_distance", dmin ? json(*dmin) : json(nullptr)}};
      out.stream() << j.dump(2) << "\n";
      break;
    }
    case fll::ReportFormat::kCsv:
      out.stream() << "size,t_del,t_ins,corrects,min_distance\n"
                   << c.size() << "," << t_del << "," << t_ins << "," << (corrects ? "true" : "false") << ","
                   << (dmin ? std::to_string(*dmin) : "") << "\n";
      break;
    case fll::ReportFormat::kText:
      out.stream() << c.size() << " codewords of length " << c.length() << "\n"
                   << (corrects ? "corrects " : "does not correct ") << t_del << " deletions and " << t_ins
                   << " insertions\n";
      if (dmin) out.stream() << "minimum distance " << *dmin << "\n";
      break;
  }
  return corrects ? 0 : 1;
}

int cmd_verify(const Globals& g, const std::string& suite, const std::vector<std::string>& assignments) {
  const std::vector<std::string> names =
      suite == "all" ? fll::suite_names() : std::vector<std::string>{suite};
  std::vector<fll::VerificationReport> reports;
  for (const auto& name : names) {
    const auto accepted = fll::suite_defaults(name);
    fll::SuiteParams params;
    params.set("workers", g.workers);
    params.set("max_space", g.max_space);
    if (accepted.count("m") && g.m != 2) params.set("m", g.m);
    if (g.n) {
      if (accepted.count("n_min")) params.set("n_min", *g.n);
      params.set("n_max", *g.n);
    }
    if (g.seed && accepted.count("seed")) params.set("seed", *g.seed);
    for (const auto& a : assignments) params.set(std::string_view(a));
    reports.push_back(fll::run_suite(name, params));
  }

  Output out{g.out};
  const fll::ReportFormat format = format_or(g, fll::ReportFormat::kText);
  if (format == fll::ReportFormat::kJson && reports.size() > 1) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(fll::to_json(r));
    out.stream() << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out.stream() << fll::emit_report(r, format);
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed length Levenshtein metric toolkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--m", g.m, "alphabet size")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
  app.add_option("--n", g.n, "word length");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--workers", g.workers, "worker threads, 0 = all cores");
  app.add_option("--max-space", g.max_space, "largest word space enumerated");
  app.add_option("--format", g.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", g.out, "write output to this file");
  app.fallthrough();

  std::string x, y, center, order = "del-ins", method = "filter", file, suite;
  std::size_t radius = 1, t_del = 0, t_ins = 0, t = 1;
  bool enumerate = false, exhaustive = false, list = false;
  std::vector<std::string> assignments;

  auto* dist = app.add_subcommand("dist", "FLL distance between two words");
  dist->add_option("x", x)->required();
  dist->add_option("y", y)->required();

  auto* ball = app.add_subcommand("ball", "FLL ball size and members");
  ball->add_option("--center", center)->required();
  ball->add_option("--radius", radius);
  ball->add_flag("--enumerate", enumerate, "print the members");
  ball->add_option("--method", method, "filter or bfs");

  auto* sphere = app.add_subcommand("sphere", "deletion/insertion sphere members");
  sphere->add_option("--center", center)->required();
  sphere->add_option("--t-del", t_del);
  sphere->add_option("--t-ins", t_ins);
  sphere->add_option("--order", order, "del-ins or ins-del");

  auto* extremes = app.add_subcommand("extremes", "minimum and maximum radius-1 ball sizes");
  extremes->add_flag("--exhaustive", exhaustive, "confirm against every word");

  app.add_subcommand("average", "expected radius-1 ball size, closed form vs enumeration");

  auto* anticodes = app.add_subcommand("anticodes", "maximal anticode sizes");
  anticodes->add_option("--t", t);
  anticodes->add_flag("--list", list, "print every maximal anticode");

  auto* check = app.add_subcommand("check-code", "deletion/insertion correction check");
  check->add_option("--file", file)->required();
  check->add_option("--t-del", t_del);
  check->add_option("--t-ins", t_ins);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite name or all")->required();
  verify->add_option("--param", assignments, "key=value suite parameter");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*dist) return cmd_dist(g, x, y);
    if (*ball) return cmd_ball(g, center, radius, enumerate, method);
    if (*sphere) return cmd_sphere(g, center, t_del, t_ins, order);
    if (*extremes) return cmd_extremes(g, exhaustive);
    if (app.got_subcommand("average")) return cmd_average(g);
    if (*anticodes) return cmd_anticodes(g, t, list);
    if (*check) return cmd_check_code(g, file, t_del, t_ins);
    if (*verify) return cmd_verify(g, suite, assignments);
  } catch (const fll::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
