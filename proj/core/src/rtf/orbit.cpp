#include "rtfcheck/rtf/orbit.hpp"

#include <json.hpp>

namespace rtfcheck::rtf {

namespace {

void check_degree(const DivisorShape& shape, int d) {
  if (d < 0 || shape.total_degree() != 2 * d) {
    throw InvalidArgument("shape " + shape.to_string() + " has degree " + std::to_string(shape.total_degree()) +
                          ", expected 2d = " + std::to_string(2 * d));
  }
}

std::string optional_text(const std::optional<Rational>& v) { return v ? v->to_string() : "-"; }

}  // namespace

bool OrbitReport::all_equal() const {
  for (const auto& row : rows) {
    if (!row.equal) return false;
  }
  return true;
}

std::string OrbitReport::to_tsv() const {
  std::string out;
  for (const auto& row : rows) {
    out += shape.to_string() + '\t' + std::to_string(d) + '\t' + std::to_string(row.r) + '\t' + row.j_value.to_string() +
           '\t' + optional_text(row.i_brute) + '\t' + optional_text(row.i_structured) + '\t' +
           (row.equal ? "true" : "false") + '\n';
  }
  return out;
}

std::string OrbitReport::to_text() const {
  nlohmann::ordered_json doc;
  doc["shape"] = shape.to_string();
  doc["d"] = d;
  doc["orbital"] = orbital.to_string();
  auto rows_json = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r;
    r["r"] = row.r;
    r["J_r"] = row.j_value.to_string();
    r["I_r_brute"] = row.i_brute ? nlohmann::ordered_json(row.i_brute->to_string()) : nlohmann::ordered_json(nullptr);
    r["I_r_structured"] =
        row.i_structured ? nlohmann::ordered_json(row.i_structured->to_string()) : nlohmann::ordered_json(nullptr);
    r["equal"] = row.equal;
    rows_json.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows_json);
  return doc.dump(2);
}

IdentityViolation::IdentityViolation(OrbitReport report)
    : Error("I_r != J_r at orbit " + report.shape.to_string()), report_(std::move(report)) {}

QsLaurent geometric_orbital(const DivisorShape& shape, int d) {
  check_degree(shape, d);
  QsLaurent out;
  for (int i = 0; i <= 2 * d; ++i) {
    out += QsLaurent::monomial(2 * (i - d), Rational(curves::splitting_count(shape, i)));
  }
  return out;
}

Rational jr_value(const DivisorShape& shape, int d, int r) {
  if (r < 0) throw InvalidArgument("jr_value: r must be nonnegative");
  const Rational by_derivative = exactnum::normalized_derivative(geometric_orbital(shape, d), static_cast<unsigned>(r));
  exactnum::BigInt by_formula = 0;
  for (int i = 0; i <= 2 * d; ++i) {
    by_formula += exactnum::ipow(exactnum::BigInt(i - d), static_cast<unsigned>(r)) * curves::splitting_count(shape, i);
  }
  by_formula *= exactnum::ipow(exactnum::BigInt(2), static_cast<unsigned>(r));
  if (by_derivative != Rational(by_formula)) {
    throw InternalError("J_r routes disagree at " + shape.to_string() + ": derivative " + by_derivative.to_string() +
                        " vs weighted sum " + by_formula.get_str());
  }
  return by_derivative;
}

Rational ir_value(const DivisorShape& shape, int r, TracePath path, int cap) {
  if (r < 0) throw InvalidArgument("ir_value: r must be nonnegative");
  const permchar::CycleType ct = curves::shape_cycle_type(shape);
  const int n = shape.total_degree();
  if (path == TracePath::brute) return Rational(tensorrep::brute_trace(n, r, ct, cap));
  return Rational(tensorrep::structured_trace(n, r, ct));
}

OrbitReport compare_orbit(const DivisorShape& shape, int d, int r_max, int cap, const tensorrep::BruteTracer* tracer) {
  check_degree(shape, d);
  if (r_max < 0) throw InvalidArgument("compare_orbit: r_max must be nonnegative");
  OrbitReport report{shape, d, geometric_orbital(shape, d), {}};

  const bool reduced = shape.is_multiplicity_free();
  const int n = 2 * d;
  std::optional<tensorrep::BruteTracer> own_tracer;
  if (reduced && n <= cap && (tracer == nullptr || tracer->n() != n || tracer->r_max() < r_max)) {
    own_tracer.emplace(n, r_max, cap);
    tracer = &*own_tracer;
  }
  const bool brute_available = reduced && n <= cap;
  const auto ct = reduced ? curves::shape_cycle_type(shape) : permchar::CycleType();

  for (int r = 0; r <= r_max; ++r) {
    OrbitRow row;
    row.r = r;
    row.j_value = jr_value(shape, d, r);
    if (reduced) {
      row.i_structured = Rational(tensorrep::structured_trace(n, r, ct));
      if (brute_available) row.i_brute = Rational(tracer->trace(r, ct));
      row.equal = *row.i_structured == row.j_value && (!row.i_brute || *row.i_brute == row.j_value);
    }
    report.rows.push_back(std::move(row));
  }
  if (!report.all_equal()) throw IdentityViolation(std::move(report));
  return report;
}

}  // namespace rtfcheck::rtf
