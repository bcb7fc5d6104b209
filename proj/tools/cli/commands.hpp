#pragma once

#include <iosfwd>
#include <string>

#include "cli/run_config.hpp"

namespace rtfcheck::cli {

// What a command produced. `output` goes to --out or stdout; `diagnostics`
// to stderr.
struct CommandResult {
  int exit_code = kExitOk;
  std::string output;
  std::string diagnostics;
};

CommandResult cmd_verify_identity(const RunConfig& config);
CommandResult cmd_curve_report(const RunConfig& config);
CommandResult cmd_spectrum(const RunConfig& config);
CommandResult cmd_census(const RunConfig& config);

// Validates the config, dispatches, and maps library errors to exit status 2.
CommandResult run_command(const RunConfig& config);

// Full entry point: argument parsing, dispatch, output routing.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rtfcheck::cli
