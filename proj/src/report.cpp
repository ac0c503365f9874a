#include "staircase/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace staircase {

namespace {
using ordered_json = nlohmann::ordered_json;
}

bool is_known_gap(const VerificationReport& r) {
  return r.note.rfind("known-gap", 0) == 0;
}

std::string to_json_line(const VerificationReport& r) {
  ordered_json j;
  j["suite"] = r.suite;
  ordered_json params = ordered_json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  j["params"] = params;
  if (r.formula_value) j["formula_value"] = r.formula_value->str();
  if (r.oracle_value) j["oracle_value"] = r.oracle_value->str();
  j["match"] = r.match;
  j["note"] = r.note;
  return j.dump();
}

VerificationReport report_from_json_line(const std::string& line) {
  const ordered_json j = ordered_json::parse(line);
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& [name, value] : j.at("params").items()) {
    r.params.emplace_back(name, value.get<long long>());
  }
  if (j.contains("formula_value")) {
    r.formula_value = BigCount(j.at("formula_value").get<std::string>());
  }
  if (j.contains("oracle_value")) {
    r.oracle_value = BigCount(j.at("oracle_value").get<std::string>());
  }
  r.match = j.at("match").get<bool>();
  r.note = j.at("note").get<std::string>();
  return r;
}

std::string to_text_line(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.match ? "ok   " : "FAIL ") << r.suite << " ";
  bool first = true;
  for (const auto& [name, value] : r.params) {
    if (!first) out << " ";
    first = false;
    out << name << "=" << value;
  }
  if (r.formula_value) out << "  formula=" << r.formula_value->str();
  if (r.oracle_value) out << "  oracle=" << r.oracle_value->str();
  if (!r.note.empty()) out << "  [" << r.note << "]";
  return out.str();
}

} // namespace staircase
