#pragma once

#include <pgate/factor.hpp>
#include <pgate/obstruction.hpp>
#include <pgate_cli/input.hpp>

#include <json.hpp>

#include <string>

namespace pgate::cli {

enum class Command { Torsion, Obstruct, Factor, Cover };

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kParseError = 2,
  kValidationError = 3,
  kObstructed = 10,
};

struct Options {
  FactorOptions factor;
  LiftSelection lift = LiftSelection::Both;
};

struct Report {
  int exit_code = kSuccess;
  nlohmann::ordered_json json;
  std::string text;
};

Command parse_command(const std::string& name);
std::string to_string(Command c);

// Never throws for bad input: parse and validation failures become reports
// with the matching exit code.
Report run(Command command, std::string_view json_text, const Options& options,
           const std::string& name = "");

Report run(Command command, const InputDocument& doc, const Options& options);

const char* version();

}  // namespace pgate::cli
