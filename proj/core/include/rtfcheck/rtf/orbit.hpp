#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rtfcheck/curves/shapes.hpp"
#include "rtfcheck/errors.hpp"
#include "rtfcheck/exactnum/laurent.hpp"
#include "rtfcheck/tensorrep/tensorrep.hpp"

namespace rtfcheck::rtf {

using curves::DivisorShape;
using exactnum::QsLaurent;
using exactnum::Rational;

struct OrbitRow {
  int r = 0;
  Rational j_value;
  std::optional<Rational> i_brute;       // absent above the tensor cap or for non-reduced shapes
  std::optional<Rational> i_structured;  // absent for non-reduced shapes
  bool equal = true;

  friend bool operator==(const OrbitRow&, const OrbitRow&) = default;
};

// Both sides of the key identity at one orbit, for r = 0..r_max.
struct OrbitReport {
  DivisorShape shape;
  int d = 0;
  QsLaurent orbital;
  std::vector<OrbitRow> rows;

  bool all_equal() const;

  // Tab-separated rows matching kOrbitTsvHeader, one per r, each ending in '\n'.
  std::string to_tsv() const;
  // A single JSON object.
  std::string to_text() const;
};

inline constexpr const char* kOrbitTsvHeader = "shape\td\tr\tJ_r\tI_r_brute\tI_r_structured\tequal";

// Raised when J_r and I_r disagree at some orbit. Carries the full report.
class IdentityViolation : public Error {
 public:
  explicit IdentityViolation(OrbitReport report);
  const OrbitReport& report() const { return report_; }

 private:
  OrbitReport report_;
};

// sum_i N_i(shape) q^{2(i-d)s}, with N_i the splitting counts.
QsLaurent geometric_orbital(const DivisorShape& shape, int d);

// The normalized r-th derivative of geometric_orbital, cross-checked against
// 2^r sum_i (i-d)^r N_i. Disagreement throws InternalError.
Rational jr_value(const DivisorShape& shape, int d, int r);

enum class TracePath { brute, structured };

// Tr(H^r o P_sigma) on (Q^2)^{(x)2d} with sigma the Frobenius cycle type of a
// reduced shape. Throws MultiplicityUnsupported for non-reduced shapes and
// CapExceeded on the brute path above the cap.
Rational ir_value(const DivisorShape& shape, int r, TracePath path, int cap = tensorrep::kDefaultTensorCap);

// Builds the report for r = 0..r_max and throws IdentityViolation on any
// mismatch. A tracer for n = 2d, if supplied, is reused for the brute column.
OrbitReport compare_orbit(const DivisorShape& shape, int d, int r_max, int cap = tensorrep::kDefaultTensorCap,
                          const tensorrep::BruteTracer* tracer = nullptr);

}  // namespace rtfcheck::rtf
