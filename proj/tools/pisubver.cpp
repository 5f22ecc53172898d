#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pisub/scenarios.hpp"

int main(int argc, char** argv) {
  CLI::App app{"verification harness for pi-maximal subgroup scenarios"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run verification scenarios");
  std::vector<std::string> names;
  bool all = false;
  bool deep = false;
  std::string format = "text";
  int max_seconds = 0;
  std::uint64_t element_cap = pisub::kDefaultElementCap;
  std::string out_file;
  verify->add_option("--scenario", names, "scenario name (repeatable)");
  verify->add_flag("--all", all, "run every registered scenario");
  verify->add_flag("--deep", deep, "enable the extended runtime budget checks");
  verify->add_option("--format", format, "output format: json|text")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--max-seconds", max_seconds,
                     "per-scenario time budget (0 = unlimited)");
  verify->add_option("--element-cap", element_cap,
                     "element enumeration cap for group operations");
  verify->add_option("--out", out_file, "write the report to a file");

  auto* list = app.add_subcommand("list", "print the scenario registry");

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) {
    for (const pisub::ScenarioInfo& s : pisub::list_scenarios())
      std::cout << s.name << (s.deep ? " [deep]" : "") << "\n    "
                << s.description << "\n";
    return 0;
  }

  if (all) {
    names.clear();
    for (const pisub::ScenarioInfo& s : pisub::list_scenarios())
      names.push_back(s.name);
  }
  if (names.empty()) {
    std::cerr << "no scenarios requested; use --scenario NAME or --all\n";
    return 2;
  }

  pisub::RunOptions opts;
  opts.deep = deep;
  opts.element_cap = element_cap;
  opts.max_seconds = max_seconds;

  std::ofstream file;
  if (!out_file.empty()) {
    file.open(out_file);
    if (!file) {
      std::cerr << "cannot open output file: " << out_file << "\n";
      return 2;
    }
  }
  std::ostream& out = out_file.empty() ? std::cout : file;

  int exit_code = 0;
  for (const std::string& name : names) {
    pisub::ScenarioReport r = pisub::run_scenario(name, opts);
    out << pisub::emit_report(r, format);
    if (format == "text") out << "\n";
    if (r.status == "error")
      exit_code = 2;
    else if (r.status == "fail" && exit_code == 0)
      exit_code = 1;
  }
  return exit_code;
}
