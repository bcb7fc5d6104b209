#pragma once

#include <optional>
#include <string>

namespace rtfcheck::cli {

enum class Command { verify_identity, curve_report, spectrum, census };
enum class OutputFormat { tsv, text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInvalidInput = 2;

struct Caps {
  int tensor_n = 8;
  int shape_degree = 12;
  long census_q = 11;
};

// Parameters for one CLI invocation. Fields a command does not use stay at -1.
struct RunConfig {
  Command command = Command::verify_identity;
  int d_max = -1;
  int r_max = -1;
  int n = -1;
  int d = -1;
  long q = -1;
  std::string curve_path;
  OutputFormat format = OutputFormat::tsv;
  std::string out_path;  // empty means standard output
  std::optional<long> cap_override;

  // The caps in effect, with --cap-override applied to the one this command uses.
  Caps caps() const;

  // Throws InvalidArgument / CapExceeded before any computation starts.
  void validate() const;
};

const char* command_name(Command c);

}  // namespace rtfcheck::cli
