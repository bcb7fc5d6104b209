#include "cli/run_config.hpp"

#include <string>

#include "rtfcheck/curves/shapes.hpp"
#include "rtfcheck/errors.hpp"
#include "rtfcheck/rtf/quadratic.hpp"
#include "rtfcheck/tensorrep/tensorrep.hpp"

namespace rtfcheck::cli {

const char* command_name(Command c) {
  switch (c) {
    case Command::verify_identity: return "verify-identity";
    case Command::curve_report: return "curve-report";
    case Command::spectrum: return "spectrum";
    case Command::census: return "census";
  }
  return "?";
}

Caps RunConfig::caps() const {
  Caps caps{tensorrep::kDefaultTensorCap, curves::kDefaultShapeDegreeCap, rtf::kDefaultCensusCap};
  if (!cap_override) return caps;
  switch (command) {
    case Command::verify_identity:
    case Command::spectrum: caps.tensor_n = static_cast<int>(*cap_override); break;
    case Command::curve_report: caps.shape_degree = static_cast<int>(*cap_override); break;
    case Command::census: caps.census_q = *cap_override; break;
  }
  return caps;
}

void RunConfig::validate() const {
  const auto require = [](bool ok, const std::string& message) {
    if (!ok) throw InvalidArgument(message);
  };
  if (cap_override) require(*cap_override >= 0, "--cap-override must be nonnegative");
  const Caps c = caps();
  switch (command) {
    case Command::verify_identity:
      require(d_max >= 1, "verify-identity: --d-max must be at least 1");
      require(r_max >= 0, "verify-identity: --r-max must be nonnegative");
      if (2 * d_max > c.tensor_n) {
        throw CapExceeded("verify-identity: 2 * d-max = " + std::to_string(2 * d_max) + " exceeds tensor cap " +
                          std::to_string(c.tensor_n));
      }
      break;
    case Command::curve_report:
      require(!curve_path.empty(), "curve-report: --curve is required");
      require(d >= 0, "curve-report: --d must be nonnegative");
      require(r_max >= 0, "curve-report: --r-max must be nonnegative");
      if (2 * d > c.shape_degree) {
        throw CapExceeded("curve-report: degree 2d = " + std::to_string(2 * d) + " exceeds shape cap " +
                          std::to_string(c.shape_degree));
      }
      break;
    case Command::spectrum:
      require(n >= 1, "spectrum: --n must be positive");
      if (n > c.tensor_n) {
        throw CapExceeded("spectrum: n = " + std::to_string(n) + " exceeds tensor cap " + std::to_string(c.tensor_n));
      }
      break;
    case Command::census:
      require(q >= 2, "census: --q is required");
      if (q > c.census_q) {
        throw CapExceeded("census: q = " + std::to_string(q) + " exceeds census cap " + std::to_string(c.census_q));
      }
      break;
  }
}

}  // namespace rtfcheck::cli
