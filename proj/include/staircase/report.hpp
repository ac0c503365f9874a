#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "staircase/bigint.hpp"

namespace staircase {

// One formula-vs-oracle comparison (or bijection round-trip) at one grid
// point. Either value may be absent (round-trip suites have no numbers).
struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, long long>> params;
  std::optional<BigCount> formula_value;
  std::optional<BigCount> oracle_value;
  bool match = false;
  std::string note;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Expected discrepancies carry this note prefix and are excluded from
// pass/fail when gaps are allowed.
bool is_known_gap(const VerificationReport& r);

// One JSON object per report; counts serialized as decimal strings so no
// precision is lost; key order fixed (suite, params, formula_value,
// oracle_value, match, note) with absent values omitted.
std::string to_json_line(const VerificationReport& r);
VerificationReport report_from_json_line(const std::string& line);

// Human-readable single line.
std::string to_text_line(const VerificationReport& r);

} // namespace staircase
