#pragma once

// Command-line front end: list, run, check, emit.
//
// Exit codes: 0 every assertion passed, 1 some assertion failed,
// 2 parse or usage error (including unknown scenario names).

#include "fano/builtin.hpp"
#include "fano/dsl.hpp"
#include "fano/scenario.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace fano {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

namespace detail {

inline int emit_report(const Report& report, const std::string& format, bool verbose, bool timestamp,
                       std::ostream& out) {
  if (format == "json") out << format_json(report, timestamp);
  else out << format_text(report, verbose);
  return report.failed == 0 ? kExitPass : kExitFail;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of intersection numbers on Fano fourfolds and their blowups", "fanocheck"};
  app.require_subcommand(1);

  std::vector<std::string> names;
  std::vector<std::string> files;
  std::string emit_name;
  std::string format = "text";
  bool all = false;
  bool verbose = false;
  bool timestamp = false;

  auto* list_cmd = app.add_subcommand("list", "Print the built-in scenario names");
  auto* run_cmd = app.add_subcommand("run", "Run built-in scenarios (all of them when no name is given)");
  run_cmd->add_option("names", names, "Scenario names");
  run_cmd->add_flag("--all", all, "Run every built-in scenario");
  auto* check_cmd = app.add_subcommand("check", "Parse and run scenario files");
  check_cmd->add_option("files", files, "Scenario files")->required();
  auto* emit_cmd = app.add_subcommand("emit", "Print a built-in scenario in the scenario language");
  emit_cmd->add_option("name", emit_name, "Scenario name")->required();
  for (auto* cmd : {run_cmd, check_cmd}) {
    cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--verbose", verbose, "Include scenario notes in the text report");
    cmd->add_flag("--timestamp", timestamp, "Add a generation timestamp to the JSON report");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  }

  std::vector<Scenario> builtins;
  try {
    builtins = builtin_scenarios();
  } catch (const std::exception& e) {
    err << "internal error: built-in scenarios do not parse: " << e.what() << "\n";
    return kExitUsage;
  }

  if (*list_cmd) {
    std::vector<std::string> sorted;
    for (const auto& s : builtins) sorted.push_back(s.name);
    std::sort(sorted.begin(), sorted.end());
    for (const auto& n : sorted) out << n << "\n";
    return kExitPass;
  }

  if (*emit_cmd) {
    const Scenario* s = find_scenario(builtins, emit_name);
    if (!s) {
      err << "unknown scenario '" << emit_name << "' (see 'fanocheck list')\n";
      return kExitUsage;
    }
    out << dsl::print(*s);
    return kExitPass;
  }

  if (*run_cmd) {
    if (all && !names.empty()) {
      err << "--all cannot be combined with scenario names\n";
      return kExitUsage;
    }
    std::vector<Scenario> selected;
    if (names.empty()) {
      selected = builtins;
    } else {
      for (const auto& n : names) {
        const Scenario* s = find_scenario(builtins, n);
        if (!s) {
          err << "unknown scenario '" << n << "' (see 'fanocheck list')\n";
          return kExitUsage;
        }
        if (std::none_of(selected.begin(), selected.end(), [&](const auto& x) { return x.name == n; }))
          selected.push_back(*s);
      }
    }
    return detail::emit_report(run(selected), format, verbose, timestamp, out);
  }

  // check
  std::vector<Scenario> scenarios;
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      err << path << ": cannot open file\n";
      return kExitUsage;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
      auto doc = dsl::parse(buffer.str());
      for (auto& s : doc.scenarios) scenarios.push_back(std::move(s));
    } catch (const dsl::ParseError& e) {
      err << path << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << "\n";
      return kExitUsage;
    }
  }
  return detail::emit_report(run(scenarios), format, verbose, timestamp, out);
}

}  // namespace fano
