#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pisub/perm_group.hpp"
#include "pisub/report.hpp"

namespace pisub {

struct RunOptions {
  bool deep = false;
  std::uint64_t element_cap = kDefaultElementCap;
  int max_seconds = 0;  // 0 = no budget
};

struct ScenarioInfo {
  std::string name;
  std::string description;
  bool deep = false;  // needs the extended runtime budget
};

// full registry in stable order
const std::vector<ScenarioInfo>& list_scenarios();

// Runs one registered scenario; unknown names and internal errors yield a
// report with status "error" rather than throwing.
ScenarioReport run_scenario(const std::string& name, const RunOptions& opts);

}  // namespace pisub
