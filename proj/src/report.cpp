#include "pisub/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pisub {

std::string emit_report(const ScenarioReport& r, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["scenario"] = r.scenario;
    j["status"] = r.status;
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckRecord& c : r.checks) {
      nlohmann::ordered_json jc;
      jc["name"] = c.name;
      jc["expected"] = c.expected;
      jc["actual"] = c.actual;
      jc["pass"] = c.pass;
      j["checks"].push_back(std::move(jc));
    }
    j["consumed_facts"] = r.consumed_facts;
    j["wall_time_ms"] = r.wall_time_ms;
    if (!r.error_message.empty()) j["error"] = r.error_message;
    return j.dump(2) + "\n";
  }
  if (format != "text") throw std::invalid_argument("unknown report format");

  std::ostringstream out;
  out << "scenario: " << r.scenario << "\n";
  out << "status:   " << r.status << "  (" << r.wall_time_ms << " ms)\n";
  if (!r.error_message.empty()) out << "error:    " << r.error_message << "\n";
  std::size_t wname = 4, wexp = 8;
  for (const CheckRecord& c : r.checks) {
    wname = std::max(wname, c.name.size());
    wexp = std::max(wexp, c.expected.size());
  }
  for (const CheckRecord& c : r.checks) {
    out << "  " << (c.pass ? "ok  " : "FAIL") << "  " << std::left
        << std::setw(static_cast<int>(wname)) << c.name << "  expected "
        << std::setw(static_cast<int>(wexp)) << c.expected << "  got "
        << c.actual << "\n";
  }
  if (!r.consumed_facts.empty()) {
    out << "consumed facts (trusted, not machine-proved):\n";
    for (const std::string& f : r.consumed_facts) out << "  - " << f << "\n";
  }
  return out.str();
}

}  // namespace pisub
