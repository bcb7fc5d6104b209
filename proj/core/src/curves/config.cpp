#include "rtfcheck/curves/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rtfcheck/errors.hpp"

namespace rtfcheck::curves {

namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::vector<BigInt> coefficient_list(const json& doc, const char* field) {
  if (!doc.contains(field)) throw InvalidArgument(std::string("curve config: missing field '") + field + "'");
  const json& value = doc.at(field);
  if (!value.is_array()) throw InvalidArgument(std::string("curve config: field '") + field + "' must be an integer list");
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const json& c = value[i];
    if (!c.is_number_integer()) {
      throw InvalidArgument(std::string("curve config: ") + field + "[" + std::to_string(i) + "] is not an integer");
    }
    out.emplace_back(std::to_string(c.get<long long>()));
  }
  return out;
}

std::string render_list(const std::vector<BigInt>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].get_str();
  }
  return out + "]";
}

}  // namespace

CurveConfig CurveConfig::parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InvalidArgument("curve config: syntax error at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!doc.is_object()) throw InvalidArgument("curve config: top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "q" && key != "zeta_numerator" && key != "eta_numerator") {
      throw InvalidArgument("curve config: unknown field '" + key + "'");
    }
  }
  CurveConfig out;
  if (!doc.contains("q") || !doc.at("q").is_number_integer()) {
    throw InvalidArgument("curve config: field 'q' must be an integer");
  }
  out.q = doc.at("q").get<long>();
  out.zeta_numerator = coefficient_list(doc, "zeta_numerator");
  out.eta_numerator = coefficient_list(doc, "eta_numerator");
  return out;
}

CurveConfig CurveConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open curve config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse(buffer.str());
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

std::string CurveConfig::to_text() const {
  return "{\n  \"q\": " + std::to_string(q) + ",\n  \"zeta_numerator\": " + render_list(zeta_numerator) +
         ",\n  \"eta_numerator\": " + render_list(eta_numerator) + "\n}\n";
}

void CurveConfig::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write curve config " + path.string());
  out << to_text();
}

DoubleCover CurveConfig::to_cover() const { return DoubleCover(ZetaData(q, zeta_numerator), eta_numerator); }

}  // namespace rtfcheck::curves
