#pragma once

#include <string>
#include <utility>
#include <vector>

#include "otfkm/linalg.hpp"

namespace otfkm {

inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckStatus { Pass, Fail, Inconclusive };

struct CheckRecord {
  std::string name;    // machine id, e.g. "shape.spectrum"
  std::string claim;   // the verified statement, in formula form
  double residual = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::Pass;
  long points = 0;
  double wall_ms = 0.0;  // console diagnostics only; never serialized
  std::vector<double> witness;  // offending point, when a check fails
};

struct Report {
  std::string version = kToolVersion;
  std::vector<std::pair<std::string, std::string>> config;  // echo, ordered
  std::vector<CheckRecord> checks;

  void set_config(const std::string& key, const std::string& value);
  CheckRecord& add(CheckRecord rec);
  // Convenience: residual-vs-tolerance check.
  CheckRecord& add(const std::string& name, const std::string& claim,
                   double residual, double tolerance, long points = 0);
  void append(const Report& other);

  int passed() const;
  int failed() const;
  int inconclusive() const;
  bool all_passed() const { return failed() == 0; }
};

// Key/value tree with arrays, UTF-8, fixed key order.  Bitwise deterministic
// for identical inputs (floats serialized shortest round-trip).
std::string emit_tree(const Report& report);

// Comma-separated table, one row per check.
std::string emit_table(const Report& report);

std::string format_double(double v);

}  // namespace otfkm
