#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pisub {

struct CheckRecord {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ScenarioReport {
  std::string scenario;
  std::string status;  // "pass" | "fail" | "error"
  std::vector<CheckRecord> checks;
  std::vector<std::string> consumed_facts;
  std::int64_t wall_time_ms = 0;
  std::string error_message;  // set iff status == "error"
};

// format "json": fixed key order {schema_version, scenario, status, checks,
// consumed_facts, wall_time_ms}; byte-identical for identical inputs.
// format "text": aligned human-readable table.
std::string emit_report(const ScenarioReport& r, const std::string& format);

inline constexpr const char* kReportSchemaVersion = "pisub-report/1";

}  // namespace pisub
