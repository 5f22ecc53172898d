#include "doctest.h"
#include "json.hpp"
#include "pisub/report.hpp"
#include "pisub/scenarios.hpp"

using namespace pisub;

static ScenarioReport sample() {
  ScenarioReport r;
  r.scenario = "demo";
  r.status = "pass";
  r.checks = {{"first", "1", "1", true}, {"second", "true", "true", true}};
  r.consumed_facts = {"a trusted fact"};
  r.wall_time_ms = 42;
  return r;
}

TEST_CASE("json report round trip with fixed key order") {
  ScenarioReport r = sample();
  std::string s = emit_report(r, "json");
  auto j = nlohmann::json::parse(s);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["scenario"] == "demo");
  CHECK(j["status"] == "pass");
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][0]["name"] == "first");
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["consumed_facts"][0] == "a trusted fact");
  CHECK(j["wall_time_ms"] == 42);
  // key order is fixed
  CHECK(s.find("schema_version") < s.find("scenario"));
  CHECK(s.find("\"scenario\"") < s.find("\"status\""));
  CHECK(s.find("\"status\"") < s.find("\"checks\""));
  // identical input gives identical bytes
  CHECK(emit_report(sample(), "json") == s);
}

TEST_CASE("failing checks are visible in both formats") {
  ScenarioReport r = sample();
  r.checks.push_back({"third", "7", "8", false});
  r.status = "fail";
  std::string txt = emit_report(r, "text");
  CHECK(txt.find("FAIL") != std::string::npos);
  CHECK(txt.find("third") != std::string::npos);
  auto j = nlohmann::json::parse(emit_report(r, "json"));
  CHECK(j["status"] == "fail");
  CHECK(j["checks"][2]["pass"] == false);
}

TEST_CASE("unknown formats are rejected") {
  CHECK_THROWS(emit_report(sample(), "xml"));
}

TEST_CASE("scenario registry") {
  const auto& infos = list_scenarios();
  CHECK(infos.size() == 10);
  bool has_example1 = false;
  for (const ScenarioInfo& s : infos) {
    if (s.name == "example1") has_example1 = true;
    CHECK(s.deep == (s.name == "alpha-aut"));
  }
  CHECK(has_example1);
  // names unique
  for (std::size_t i = 0; i < infos.size(); ++i)
    for (std::size_t j = i + 1; j < infos.size(); ++j)
      CHECK(infos[i].name != infos[j].name);
}

TEST_CASE("unknown scenario yields an error report") {
  ScenarioReport r = run_scenario("unknown", RunOptions{});
  CHECK(r.status == "error");
  CHECK(r.error_message.find("unknown") != std::string::npos);
}

TEST_CASE("a fast scenario runs to a passing deterministic report") {
  RunOptions opts;
  ScenarioReport a = run_scenario("pgl27-intro", opts);
  ScenarioReport b = run_scenario("pgl27-intro", opts);
  CHECK(a.status == "pass");
  a.wall_time_ms = b.wall_time_ms = 0;
  CHECK(emit_report(a, "json") == emit_report(b, "json"));
}
