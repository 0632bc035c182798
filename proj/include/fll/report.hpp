#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fll/errors.hpp"

namespace fll {

enum class CheckStatus { kPass, kFail, kDocumentedDelta };

inline std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kDocumentedDelta: return "documented-delta";
  }
  return "?";
}

inline CheckStatus parse_status(std::string_view s) {
  if (s == "pass") return CheckStatus::kPass;
  if (s == "fail") return CheckStatus::kFail;
  if (s == "documented-delta") return CheckStatus::kDocumentedDelta;
  throw ParseError("unknown check status '" + std::string(s) + "'");
}

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::kPass;
  std::optional<std::string> delta;  // expected - actual, when both are numbers

  friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
  std::string suite;
  std::map<std::string, std::string> parameters;
  std::vector<Check> checks;
  std::int64_t runtime_ms = 0;
  std::optional<std::uint64_t> seed;

  // documented-delta counts as passing.
  bool passed() const {
    for (const Check& c : checks) {
      if (c.status == CheckStatus::kFail) return false;
    }
    return true;
  }

  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const Check& c : checks) n += c.status == s;
    return n;
  }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

enum class ReportFormat { kJson, kCsv, kText };

inline ReportFormat parse_report_format(std::string_view s) {
  if (s == "json") return ReportFormat::kJson;
  if (s == "csv") return ReportFormat::kCsv;
  if (s == "text") return ReportFormat::kText;
  throw UsageError("unknown format '" + std::string(s) + "' (expected json, csv or text)");
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : r.checks) {
    nlohmann::json j{{"name", c.name},
                     {"expected", c.expected},
                     {"actual", c.actual},
                     {"status", status_name(c.status)}};
    if (c.delta) j["delta"] = *c.delta;
    checks.push_back(std::move(j));
  }
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  return {{"suite", r.suite},
          {"parameters", std::move(params)},
          {"checks", std::move(checks)},
          {"runtime_ms", r.runtime_ms},
          {"seed", r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr)}};
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  try {
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    for (const auto& [k, v] : j.at("parameters").items()) r.parameters[k] = v.get<std::string>();
    for (const auto& c : j.at("checks")) {
      Check check{c.at("name").get<std::string>(), c.at("expected").get<std::string>(),
                  c.at("actual").get<std::string>(),
                  parse_status(c.at("status").get<std::string>()), std::nullopt};
      if (c.contains("delta")) check.delta = c.at("delta").get<std::string>();
      r.checks.push_back(std::move(check));
    }
    r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

inline VerificationReport parse_report(std::string_view text) {
  try {
    return report_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string emit_report(const VerificationReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: return to_json(r).dump(2) + "\n";
    case ReportFormat::kCsv: {
      std::string out = "name,expected,actual,status\n";
      for (const Check& c : r.checks) {
        out += detail::csv_field(c.name) + "," + detail::csv_field(c.expected) + "," +
               detail::csv_field(c.actual) + "," + std::string(status_name(c.status)) + "\n";
      }
      return out;
    }
    case ReportFormat::kText: {
      std::ostringstream os;
      os << "suite " << r.suite;
      for (const auto& [k, v] : r.parameters) os << " " << k << "=" << v;
      if (r.seed) os << " seed=" << *r.seed;
      os << "\n";
      for (const Check& c : r.checks) {
        os << "[" << status_name(c.status) << "] " << c.name << ": expected " << c.expected
           << ", actual " << c.actual;
        if (c.delta) os << ", delta " << *c.delta;
        os << "\n";
      }
      os << r.count(CheckStatus::kPass) << " pass, " << r.count(CheckStatus::kFail) << " fail, "
         << r.count(CheckStatus::kDocumentedDelta) << " documented-delta (" << r.runtime_ms
         << " ms)\n";
      return os.str();
    }
  }
  return {};
}

}  // namespace fll
