#include "cli/commands.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rtfcheck/curves/config.hpp"
#include "rtfcheck/curves/shapes.hpp"
#include "rtfcheck/curves/zeta.hpp"
#include "rtfcheck/errors.hpp"
#include "rtfcheck/permchar/characters.hpp"
#include "rtfcheck/rtf/orbit.hpp"
#include "rtfcheck/rtf/quadratic.hpp"
#include "rtfcheck/tensorrep/tensorrep.hpp"

namespace rtfcheck::cli {

namespace {

using json = nlohmann::ordered_json;
using exactnum::BigInt;
using exactnum::Rational;

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string spectrum_text(const std::vector<long>& values) {
  std::map<long, int> mult;
  for (long v : values) ++mult[v];
  std::string out;
  for (const auto& [v, m] : mult) {
    if (!out.empty()) out += ',';
    out += std::to_string(v) + ":" + std::to_string(m);
  }
  return out;
}

std::string join_integers(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].get_str();
  }
  return out;
}

}  // namespace

CommandResult cmd_verify_identity(const RunConfig& config) {
  const Caps caps = config.caps();
  CommandResult result;
  std::ostringstream tsv;
  tsv << "d\tcycle_type\tr\tbrute\tstructured\tweight_formula\tequal\n";
  json rows = json::array();
  std::size_t row_count = 0;
  std::size_t violations = 0;

  for (int d = 1; d <= config.d_max; ++d) {
    const int n = 2 * d;
    const tensorrep::BruteTracer tracer(n, config.r_max, caps.tensor_n);
    for (const auto& shape : permchar::partitions_of(n)) {
      const permchar::CycleType ct(shape);
      for (int r = 0; r <= config.r_max; ++r) {
        const BigInt brute = tracer.trace(r, ct);
        const BigInt structured = tensorrep::structured_trace(n, r, ct);
        const BigInt formula = tensorrep::weight_formula_trace(n, r, ct);
        const bool equal = brute == structured && structured == formula;
        std::ostringstream line;
        line << d << '\t' << ct.to_string() << '\t' << r << '\t' << brute.get_str() << '\t' << structured.get_str()
             << '\t' << formula.get_str() << '\t' << (equal ? "true" : "false") << '\n';
        tsv << line.str();
        rows.push_back(json{{"d", d},
                            {"cycle_type", ct.to_string()},
                            {"r", r},
                            {"brute", brute.get_str()},
                            {"structured", structured.get_str()},
                            {"weight_formula", formula.get_str()},
                            {"equal", equal}});
        ++row_count;
        if (!equal) {
          ++violations;
          result.diagnostics += "identity violation: " + line.str();
        }
      }
    }
  }
  tsv << "# rows=" << row_count << " violations=" << violations << '\n';

  if (config.format == OutputFormat::tsv) {
    result.output = tsv.str();
  } else {
    json doc;
    doc["command"] = "verify-identity";
    doc["d_max"] = config.d_max;
    doc["r_max"] = config.r_max;
    doc["rows"] = std::move(rows);
    doc["row_count"] = row_count;
    doc["violations"] = violations;
    result.output = dump(doc);
  }
  result.exit_code = violations == 0 ? kExitOk : kExitViolation;
  return result;
}

CommandResult cmd_curve_report(const RunConfig& config) {
  const Caps caps = config.caps();
  const curves::CurveConfig curve = curves::CurveConfig::load(config.curve_path);
  const curves::DoubleCover cover = curve.to_cover();
  const int degree = 2 * config.d;
  const std::vector<BigInt> closed = curves::cover_closed_points(cover, degree);
  const auto shapes = curves::enumerate_shapes(closed, degree, caps.shape_degree);

  std::optional<tensorrep::BruteTracer> tracer;
  if (degree <= caps.tensor_n) tracer.emplace(degree, config.r_max, caps.tensor_n);

  CommandResult result;
  std::ostringstream tsv;
  tsv << rtf::kOrbitTsvHeader << '\n';
  json shape_docs = json::array();
  std::vector<Rational> j_all(static_cast<std::size_t>(config.r_max) + 1);
  std::vector<Rational> j_reduced(j_all.size());
  std::vector<Rational> i_reduced(j_all.size());
  BigInt divisor_total = 0;

  for (const auto& [shape, count] : shapes) {
    rtf::OrbitReport report;
    try {
      report = rtf::compare_orbit(shape, config.d, config.r_max, caps.tensor_n, tracer ? &*tracer : nullptr);
    } catch (const rtf::IdentityViolation& e) {
      result.exit_code = kExitViolation;
      result.diagnostics += "identity violation:\n" + e.report().to_tsv();
      report = e.report();
    }
    tsv << report.to_tsv();
    divisor_total += count;
    for (const auto& row : report.rows) {
      const auto r = static_cast<std::size_t>(row.r);
      j_all[r] += Rational(count) * row.j_value;
      if (row.i_structured) {
        j_reduced[r] += Rational(count) * row.j_value;
        i_reduced[r] += Rational(count) * *row.i_structured;
      }
    }
    shape_docs.push_back(json{{"shape", shape.to_string()},
                              {"count", count.get_str()},
                              {"report", json::parse(report.to_text())}});
  }

  const BigInt expected_total = curves::effective_divisor_count(cover.cover(), degree);
  if (divisor_total != expected_total) {
    result.exit_code = kExitViolation;
    result.diagnostics += "shape counts sum to " + divisor_total.get_str() + " but the zeta function predicts " +
                          expected_total.get_str() + " effective divisors\n";
  }
  for (std::size_t r = 0; r < i_reduced.size(); ++r) {
    if (i_reduced[r] != j_reduced[r]) {
      result.exit_code = kExitViolation;
      result.diagnostics += "weighted totals differ at r=" + std::to_string(r) + "\n";
    }
  }

  if (config.format == OutputFormat::tsv) {
    tsv << "# cover_closed_points\t" << join_integers(closed) << '\n';
    for (const auto& [shape, count] : shapes) tsv << "# shape_count\t" << shape.to_string() << '\t' << count.get_str() << '\n';
    tsv << "# divisor_total\t" << divisor_total.get_str() << '\t' << expected_total.get_str() << '\n';
    for (std::size_t r = 0; r < j_all.size(); ++r) {
      tsv << "# weighted\t" << r << '\t' << j_all[r].to_string() << '\t' << j_reduced[r].to_string() << '\t'
          << i_reduced[r].to_string() << '\n';
    }
    result.output = tsv.str();
  } else {
    json doc;
    doc["command"] = "curve-report";
    doc["q"] = curve.q;
    doc["d"] = config.d;
    doc["r_max"] = config.r_max;
    doc["cover_closed_points"] = join_integers(closed);
    doc["shapes"] = std::move(shape_docs);
    doc["divisor_total"] = divisor_total.get_str();
    doc["effective_divisor_count"] = expected_total.get_str();
    json weighted = json::array();
    for (std::size_t r = 0; r < j_all.size(); ++r) {
      weighted.push_back(json{{"r", r},
                              {"J_all", j_all[r].to_string()},
                              {"J_reduced", j_reduced[r].to_string()},
                              {"I_reduced", i_reduced[r].to_string()}});
    }
    doc["weighted"] = std::move(weighted);
    result.output = dump(doc);
  }
  return result;
}

CommandResult cmd_spectrum(const RunConfig& config) {
  const Caps caps = config.caps();
  CommandResult result;
  std::ostringstream tsv;
  tsv << "n\tk\tlambda\tclaimed\tcomputed\tmatch\n";
  json rows = json::array();
  const int n = config.n;
  for (int k = (n + 1) / 2; k <= n; ++k) {
    const auto lambda = permchar::two_row(n, k);
    const std::vector<long> claimed = tensorrep::expected_isotypic_spectrum(n, k);
    const std::vector<Rational> charpoly = tensorrep::isotypic_charpoly(n, k, caps.tensor_n);
    bool splits = false;
    const auto roots = tensorrep::integer_roots(charpoly, n, &splits);
    std::vector<long> computed;
    for (const auto& [v, m] : roots) computed.insert(computed.end(), static_cast<std::size_t>(m), v);
    const bool match = splits && computed == claimed && charpoly == tensorrep::expected_isotypic_charpoly(n, k);
    const std::string computed_text = splits ? spectrum_text(computed) : "non-split";
    tsv << n << '\t' << k << '\t' << lambda.to_string() << '\t' << spectrum_text(claimed) << '\t' << computed_text
        << '\t' << (match ? "true" : "false") << '\n';
    rows.push_back(json{{"n", n},
                        {"k", k},
                        {"lambda", lambda.to_string()},
                        {"claimed", spectrum_text(claimed)},
                        {"computed", computed_text},
                        {"match", match}});
    if (!match) {
      result.exit_code = kExitViolation;
      result.diagnostics += "spectrum mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k) + "\n";
    }
  }
  if (config.format == OutputFormat::tsv) {
    result.output = tsv.str();
  } else {
    json doc;
    doc["command"] = "spectrum";
    doc["n"] = n;
    doc["rows"] = std::move(rows);
    result.output = dump(doc);
  }
  return result;
}

CommandResult cmd_census(const RunConfig& config) {
  const Caps caps = config.caps();
  const rtf::QuadraticModel model(config.q);
  const rtf::CensusRecord rec = rtf::orbit_census(model, caps.census_q);

  const std::vector<std::pair<std::string, std::string>> fields{
      {"q", std::to_string(rec.q)},
      {"group_order", std::to_string(rec.group_order)},
      {"double_cosets", std::to_string(rec.double_cosets)},
      {"nondegenerate_cosets", std::to_string(rec.nondegenerate_cosets)},
      {"degenerate_cosets", std::to_string(rec.degenerate_cosets)},
      {"degenerate_elements", std::to_string(rec.degenerate_elements)},
      {"distinct_invariants", std::to_string(rec.distinct_invariants)},
      {"trace_one_elements", std::to_string(rec.trace_one_elements)},
      {"constant_on_cosets", rec.constant_on_cosets ? "true" : "false"},
      {"all_trace_one", rec.all_trace_one ? "true" : "false"},
      {"injective", rec.injective ? "true" : "false"},
      {"surjective", rec.surjective ? "true" : "false"},
  };

  CommandResult result;
  if (config.format == OutputFormat::tsv) {
    std::string out = "field\tvalue\n";
    for (const auto& [k, v] : fields) out += k + '\t' + v + '\n';
    result.output = out;
  } else {
    json doc;
    doc["command"] = "census";
    doc["q"] = rec.q;
    doc["group_order"] = rec.group_order;
    doc["double_cosets"] = rec.double_cosets;
    doc["nondegenerate_cosets"] = rec.nondegenerate_cosets;
    doc["degenerate_cosets"] = rec.degenerate_cosets;
    doc["degenerate_elements"] = rec.degenerate_elements;
    doc["distinct_invariants"] = rec.distinct_invariants;
    doc["trace_one_elements"] = rec.trace_one_elements;
    doc["constant_on_cosets"] = rec.constant_on_cosets;
    doc["all_trace_one"] = rec.all_trace_one;
    doc["injective"] = rec.injective;
    doc["surjective"] = rec.surjective;
    result.output = dump(doc);
  }
  // Findings are data, but the asserted properties of the invariant still gate the exit status.
  if (!rec.constant_on_cosets || !rec.all_trace_one) {
    result.exit_code = kExitViolation;
    result.diagnostics += "invariant is not a well-defined trace-1 function on double cosets\n";
  }
  return result;
}

CommandResult run_command(const RunConfig& config) {
  try {
    config.validate();
    switch (config.command) {
      case Command::verify_identity: return cmd_verify_identity(config);
      case Command::curve_report: return cmd_curve_report(config);
      case Command::spectrum: return cmd_spectrum(config);
      case Command::census: return cmd_census(config);
    }
  } catch (const rtf::IdentityViolation& e) {
    return {kExitViolation, "", std::string(e.what()) + "\n" + e.report().to_tsv()};
  } catch (const Error& e) {
    return {kExitInvalidInput, "", std::string("error: ") + e.what() + "\n"};
  }
  return {kExitInvalidInput, "", "error: unknown command\n"};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of Schur-Weyl trace identities and orbital integrals on double covers"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "tsv";
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "text"}));
    sub->add_option("--out", config.out_path, "Write output to this file instead of stdout");
    sub->add_option("--cap-override", config.cap_override, "Replace the size cap used by this command");
  };

  auto* verify = app.add_subcommand("verify-identity", "Brute vs structured traces of H^r P_sigma over all cycle types");
  verify->add_option("--d-max", config.d_max, "Largest half-degree d (n = 2d)")->required();
  verify->add_option("--r-max", config.r_max, "Largest power r")->required();
  add_common(verify);

  auto* report = app.add_subcommand("curve-report", "Orbit reports for every divisor shape of degree 2d on a double cover");
  report->add_option("--curve", config.curve_path, "Curve config file")->required();
  report->add_option("--d", config.d, "Half-degree d")->required();
  report->add_option("--r-max", config.r_max, "Largest power r")->required();
  add_common(report);

  auto* spectrum = app.add_subcommand("spectrum", "Spectrum of H on each isotypic component of (Q^2)^n");
  spectrum->add_option("--n", config.n, "Tensor power n")->required();
  add_common(spectrum);

  auto* census = app.add_subcommand("census", "Double-coset census of the finite-field invariant map");
  census->add_option("--q", config.q, "Odd prime power q")->required();
  add_common(census);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  if (verify->parsed()) config.command = Command::verify_identity;
  if (report->parsed()) config.command = Command::curve_report;
  if (spectrum->parsed()) config.command = Command::spectrum;
  if (census->parsed()) config.command = Command::census;
  config.format = format == "text" ? OutputFormat::text : OutputFormat::tsv;

  const CommandResult result = run_command(config);
  err << result.diagnostics;
  if (!result.output.empty()) {
    if (config.out_path.empty()) {
      out << result.output;
    } else {
      std::ofstream file(config.out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot write " << config.out_path << '\n';
        return kExitInvalidInput;
      }
      file << result.output;
    }
  }
  return result.exit_code;
}

}  // namespace rtfcheck::cli
