#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/commands.hpp"

using rtfcheck::cli::run_cli;

namespace {

struct Run {
  int exit_code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rtfcheck");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string data(const char* name) { return (std::filesystem::path(RTFCHECK_TEST_DATA_DIR) / name).string(); }

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("verify-identity") {
  const Run small = run({"verify-identity", "--d-max", "2", "--r-max", "4"});
  CHECK(small.exit_code == 0);
  const auto lines = lines_of(small.out);
  // Header, (2 + 5) cycle types times 5 powers, summary.
  CHECK(lines.size() == 1 + 7 * 5 + 1);
  CHECK(lines.back() == "# rows=35 violations=0");
  CHECK(small.out == slurp(std::filesystem::path(RTFCHECK_GOLDEN_DIR) / "verify_identity_d2_r4.tsv"));

  const Run trivial = run({"verify-identity", "--d-max", "1", "--r-max", "0"});
  CHECK(trivial.exit_code == 0);
  CHECK(trivial.out.find("1\t1,1\t0\t4\t4\t4\ttrue\n") != std::string::npos);
  CHECK(trivial.out.find("1\t2\t0\t2\t2\t2\ttrue\n") != std::string::npos);

  const Run capped = run({"verify-identity", "--d-max", "5", "--r-max", "2"});
  CHECK(capped.exit_code == 2);
  CHECK(capped.out.empty());
  CHECK_FALSE(capped.err.empty());
  CHECK(run({"verify-identity", "--d-max", "5", "--r-max", "0", "--cap-override", "10"}).exit_code == 0);
}

TEST_CASE("spectrum") {
  const Run two = run({"spectrum", "--n", "2"});
  CHECK(two.exit_code == 0);
  CHECK(two.out.find("-2:1,0:1,2:1") != std::string::npos);
  const Run four = run({"spectrum", "--n", "4"});
  CHECK(four.exit_code == 0);
  CHECK(lines_of(four.out).size() == 4);
  CHECK(four.out == slurp(std::filesystem::path(RTFCHECK_GOLDEN_DIR) / "spectrum_n4.tsv"));
  CHECK(run({"spectrum", "--n", "9"}).exit_code == 2);
  CHECK(run({"spectrum", "--n", "-1"}).exit_code == 2);
}

TEST_CASE("census") {
  const Run three = run({"census", "--q", "3"});
  CHECK(three.exit_code == 0);
  CHECK(three.out.find("trace_one_elements\t3\n") != std::string::npos);
  const Run five = run({"census", "--q", "5", "--format", "text"});
  CHECK(five.exit_code == 0);
  const auto doc = nlohmann::json::parse(five.out);
  CHECK(doc["trace_one_elements"] == 5);
  CHECK(doc["distinct_invariants"] == doc["nondegenerate_cosets"]);
  CHECK(run({"census", "--q", "4"}).exit_code == 2);
  CHECK(run({"census", "--q", "13"}).exit_code == 2);
}

TEST_CASE("curve-report") {
  const Run d1 = run({"curve-report", "--curve", data("genus1_q3.json"), "--d", "1", "--r-max", "2"});
  CHECK(d1.exit_code == 0);
  CHECK(d1.out.find("{1^1,1^1}\t1\t0\t4\t4\t4\ttrue") != std::string::npos);
  CHECK(d1.out.find("{1^2}\t1\t0\t3\t-\t-\ttrue") != std::string::npos);
  const Run d0 = run({"curve-report", "--curve", data("genus1_q3.json"), "--d", "0", "--r-max", "0"});
  CHECK(d0.exit_code == 0);
  CHECK(d0.out.find("{}\t0\t0\t1\t1\t1\ttrue") != std::string::npos);

  const Run broken = run({"curve-report", "--curve", data("broken_functional_equation.json"), "--d", "1", "--r-max", "1"});
  CHECK(broken.exit_code == 2);
  CHECK(broken.err.find("functional equation") != std::string::npos);
  const Run truncated = run({"curve-report", "--curve", data("truncated.json"), "--d", "1", "--r-max", "1"});
  CHECK(truncated.exit_code == 2);
  CHECK(truncated.err.find("line 5") != std::string::npos);
  CHECK(run({"curve-report", "--curve", data("missing.json"), "--d", "1", "--r-max", "1"}).exit_code == 2);
}

TEST_CASE("argument errors and output routing") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"spectrum"}).exit_code == 2);
  CHECK(run({"spectrum", "--n", "2", "--format", "xml"}).exit_code == 2);

  const auto path = std::filesystem::temp_directory_path() / "rtfcheck_cli_out.tsv";
  const Run routed = run({"spectrum", "--n", "4", "--out", path.string()});
  CHECK(routed.exit_code == 0);
  CHECK(routed.out.empty());
  CHECK(slurp(path) == run({"spectrum", "--n", "4"}).out);
  std::filesystem::remove(path);
}
