#include "otfkm/report.hpp"

#include <charconv>
#include <json.hpp>

namespace otfkm {

void Report::set_config(const std::string& key, const std::string& value) {
  for (auto& kv : config)
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  config.emplace_back(key, value);
}

CheckRecord& Report::add(CheckRecord rec) {
  checks.push_back(std::move(rec));
  return checks.back();
}

CheckRecord& Report::add(const std::string& name, const std::string& claim,
                         double residual, double tolerance, long points) {
  CheckRecord rec;
  rec.name = name;
  rec.claim = claim;
  rec.residual = residual;
  rec.tolerance = tolerance;
  rec.points = points;
  rec.status = residual <= tolerance ? CheckStatus::Pass : CheckStatus::Fail;
  return add(std::move(rec));
}

void Report::append(const Report& other) {
  for (const auto& kv : other.config) set_config(kv.first, kv.second);
  for (const auto& c : other.checks) checks.push_back(c);
}

int Report::passed() const {
  int n = 0;
  for (const auto& c : checks) n += c.status == CheckStatus::Pass;
  return n;
}

int Report::failed() const {
  int n = 0;
  for (const auto& c : checks) n += c.status == CheckStatus::Fail;
  return n;
}

int Report::inconclusive() const {
  int n = 0;
  for (const auto& c : checks) n += c.status == CheckStatus::Inconclusive;
  return n;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

static const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "inconclusive";
  }
}

std::string emit_tree(const Report& report) {
  nlohmann::ordered_json root;
  root["version"] = report.version;
  nlohmann::ordered_json cfg;
  for (const auto& kv : report.config) cfg[kv.first] = kv.second;
  root["config"] = std::move(cfg);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["claim"] = c.claim;
    entry["residual"] = c.residual;
    entry["tolerance"] = c.tolerance;
    entry["status"] = status_name(c.status);
    entry["points"] = c.points;
    if (!c.witness.empty()) entry["witness_point"] = c.witness;
    checks.push_back(std::move(entry));
  }
  root["checks"] = std::move(checks);
  nlohmann::ordered_json summary;
  summary["passed"] = report.passed();
  summary["failed"] = report.failed();
  summary["inconclusive"] = report.inconclusive();
  root["summary"] = std::move(summary);
  return root.dump(2) + "\n";
}

static std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string emit_table(const Report& report) {
  std::string out = "name,claim,residual,tolerance,status,points\n";
  for (const auto& c : report.checks) {
    out += csv_escape(c.name);
    out += ',';
    out += csv_escape(c.claim);
    out += ',';
    out += format_double(c.residual);
    out += ',';
    out += format_double(c.tolerance);
    out += ',';
    out += status_name(c.status);
    out += ',';
    out += std::to_string(c.points);
    out += '\n';
  }
  return out;
}

}  // namespace otfkm
