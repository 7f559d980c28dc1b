#pragma once

// Command-line front end: argument parsing, dispatch and report rendering.
//
//   hgslab group --group <spec>
//   hgslab hgs enumerate|rho-orbits --group <spec> [--type <spec>]
//   hgslab brace extract|check|aut|gprime|ybe --group <spec> --structure <ref>
//   hgslab construct fpf --group <spec> --target <spec> --f1 <imgs> --f2 <imgs>
//   hgslab construct abelian-maps --group <spec> [--orbits]
//   hgslab construct induced --group <spec> (--t <gens> | --search)
//   hgslab correspondence --group <spec> --structure <ref> [--transport <g>]
//   hgslab verify-paper [--only <id|tag>]
//
// Every command accepts --json. Exit codes: 0 success, 1 usage error,
// 2 computation error, 3 failed check.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace hgslab {

inline constexpr const char* kVersion = "0.1.0";

enum class OutputMode { kText, kJson };

struct Command {
  std::string verb;
  std::string action;  // empty for group, correspondence, verify-paper
  std::map<std::string, std::string> options;  // flags map to "true"
  OutputMode output = OutputMode::kText;
  int threads = 1;  // from HGSLAB_THREADS

  bool has(const std::string& key) const { return options.count(key) != 0; }
  const std::string& get(const std::string& key) const;
};

// args excludes the program name. Throws Error(kUsage) naming the offending
// token.
Command parse_command(const std::vector<std::string>& args);

struct Report {
  std::string schema;
  nlohmann::ordered_json command;
  std::string group;  // spec string, empty when not applicable
  bool complete = true;
  nlohmann::ordered_json result;
  std::string text;
  int exit_code = 0;

  nlohmann::ordered_json to_json() const;
};

// Throws Error on computation failures.
Report execute(const Command& command);

// Full entry point; writes the report (or error) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hgslab
