#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rtfcheck/curves/zeta.hpp"

namespace rtfcheck::curves {

// On-disk description of a double cover: a single JSON object
//
//   {
//     "q": 3,
//     "zeta_numerator": [1, 0, 3],
//     "eta_numerator": [1]
//   }
//
// with coefficient lists constant term first. to_text() emits exactly this
// layout, so loading and re-saving a canonical file reproduces it byte for
// byte.
struct CurveConfig {
  long q = 0;
  std::vector<BigInt> zeta_numerator;
  std::vector<BigInt> eta_numerator;

  // Throws InvalidArgument with "line L, column C" for syntax errors and the
  // offending field name for schema errors.
  static CurveConfig parse(std::string_view text);
  static CurveConfig load(const std::filesystem::path& path);

  std::string to_text() const;
  void save(const std::filesystem::path& path) const;

  // Validates the zeta data and the cover (InvalidZeta on failure).
  DoubleCover to_cover() const;

  friend bool operator==(const CurveConfig&, const CurveConfig&) = default;
};

}  // namespace rtfcheck::curves
