#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string("\"") + BARGKIT_CLI_PATH + "\" " + args;
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf;
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

fs::path scratch_dir() {
  auto dir = fs::temp_directory_path() / "bargkit_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string write_input(const std::string& name, const json& j) {
  auto p = scratch_dir() / name;
  std::ofstream out(p);
  out << j.dump();
  return p.string();
}

json combo_input(int k, double re) {
  json in;
  in["type"] = "hermite_combo";
  in["dim"] = 1;
  in["terms"] = json::array({json{{"alpha", json::array({k})}, {"re", re}, {"im", 0.0}}});
  return in;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<double> csv_row(const std::string& line) {
  std::vector<double> out;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) out.push_back(std::stod(cell));
  return out;
}

}  // namespace

TEST_CASE("cli analyze reduces the standard gaussian to a single coefficient") {
  json in;
  in["type"] = "gaussian";
  in["A"] = json::array({json::array({1.0})});
  in["L"] = json::array({0.0});
  auto path = write_input("gauss1.json", in);
  auto res = run_cli("analyze --input " + path);
  REQUIRE(res.exit_code == 0);
  json out = json::parse(res.output);
  CHECK(out["dim"] == 1);
  CHECK(out["cutoff"] == 16);
  REQUIRE(out["coeffs"].size() == 1);
  CHECK(out["coeffs"][0]["alpha"] == json::array({0}));
  CHECK(std::abs(out["coeffs"][0]["re"].get<double>() - std::pow(std::acos(-1.0), 0.25)) <= 1e-10);
  CHECK(std::abs(out["coeffs"][0]["im"].get<double>()) <= 1e-12);
}

TEST_CASE("cli analyze echoes finite combinations exactly") {
  auto path = write_input("combo1.json", combo_input(1, 2.5));
  auto res = run_cli("analyze --input " + path + " --cutoff 8");
  REQUIRE(res.exit_code == 0);
  json out = json::parse(res.output);
  CHECK(out["cutoff"] == 8);
  REQUIRE(out["coeffs"].size() == 1);
  CHECK(out["coeffs"][0]["alpha"] == json::array({1}));
  CHECK(out["coeffs"][0]["re"].get<double>() == 2.5);
}

TEST_CASE("cli analyze runs are byte-for-byte deterministic") {
  auto path = write_input("gauss2.json", [] {
    json in;
    in["type"] = "gaussian";
    in["A"] = json::array({json::array({2.0})});
    in["L"] = json::array({0.0});
    return in;
  }());
  auto first = run_cli("analyze --input " + path);
  auto second = run_cli("analyze --input " + path);
  REQUIRE(first.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("cli analyze writes to a file when asked") {
  auto path = write_input("combo2.json", combo_input(0, 1.0));
  auto outfile = (scratch_dir() / "analysis.json").string();
  auto res = run_cli("analyze --input " + path + " --output " + outfile);
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.empty());
  std::ifstream in(outfile);
  json parsed = json::parse(in);
  CHECK(parsed["coeffs"].size() == 1);
}

TEST_CASE("cli stft evaluates the windowed transform on points") {
  auto path = write_input("combo3.json", combo_input(0, 1.0));
  auto res = run_cli("transform stft --input " + path + " --points \"0,0;2,0\"");
  REQUIRE(res.exit_code == 0);
  auto lines = lines_of(res.output);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "x_1,xi_1,re,im");
  auto row0 = csv_row(lines[1]);
  double v0 = 1.0 / std::sqrt(2.0 * std::acos(-1.0));
  CHECK(std::abs(row0[2] - v0) <= 1e-12);
  CHECK(std::abs(row0[3]) <= 1e-14);
  auto row1 = csv_row(lines[2]);
  CHECK(std::abs(row1[2] - v0 * std::exp(-1.0)) <= 1e-12);
}

TEST_CASE("cli bargmann transform evaluates the entire series on points") {
  auto path = write_input("combo4.json", combo_input(1, 1.0));
  auto res = run_cli("transform bargmann --input " + path + " --points \"2,0;0,1\"");
  REQUIRE(res.exit_code == 0);
  auto lines = lines_of(res.output);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "re_z_1,im_z_1,re,im");
  auto row0 = csv_row(lines[1]);
  CHECK(std::abs(row0[2] - 2.0) <= 1e-12);
  CHECK(std::abs(row0[3]) <= 1e-14);
  auto row1 = csv_row(lines[2]);
  CHECK(std::abs(row1[2]) <= 1e-14);
  CHECK(std::abs(row1[3] - 1.0) <= 1e-12);
}

TEST_CASE("cli fractional transform applies exact integer phases") {
  auto path = write_input("combo5.json", combo_input(3, 1.0));
  auto res = run_cli("transform fracft --input " + path + " --order 2");
  REQUIRE(res.exit_code == 0);
  json out = json::parse(res.output);
  REQUIRE(out["coeffs"].size() == 1);
  CHECK(out["coeffs"][0]["alpha"] == json::array({3}));
  CHECK(out["coeffs"][0]["re"].get<double>() == -1.0);
  CHECK(out["coeffs"][0]["im"].get<double>() == 0.0);
}

TEST_CASE("cli classify reports the ladder and the gaussian criterion") {
  json rule;
  rule["type"] = "coefficient_rule";
  rule["dim"] = 1;
  rule["rule"] = "stretched_exp";
  rule["params"] = json{{"s", 0.5}, {"r", 1.0}};
  auto res = run_cli("classify --input " + write_input("rule1.json", rule) + " --cutoff 40");
  REQUIRE(res.exit_code == 0);
  json out = json::parse(res.output);
  REQUIRE(out["verdicts"].size() == 22);
  bool saw = false;
  for (const auto& v : out["verdicts"]) {
    if (v["space"] == "S(0.5)") {
      CHECK(v["verdict"] == "member");
      saw = true;
    }
    if (v["space"] == "S0") CHECK(v["verdict"] == "non-member");
  }
  CHECK(saw);
  CHECK(out["fit"]["model"] == "stretched_exp");
  CHECK_FALSE(out.contains("gaussian_criterion"));

  json gauss;
  gauss["type"] = "gaussian";
  gauss["A"] = json::array({json::array({2.0})});
  gauss["L"] = json::array({0.0});
  auto res2 = run_cli("classify --input " + write_input("gauss3.json", gauss) + " --cutoff 40");
  REQUIRE(res2.exit_code == 0);
  json out2 = json::parse(res2.output);
  REQUIRE(out2.contains("gaussian_criterion"));
  CHECK(out2["gaussian_criterion"]["member"] == false);
  CHECK(std::abs(out2["gaussian_criterion"]["eigenvalues"][0]["re"].get<double>() - 2.0) <= 1e-12);
}

TEST_CASE("cli norm kinds") {
  auto ground = write_input("combo6.json", combo_input(0, 1.0));
  auto res = run_cli("norm --kind modulation --input " + ground);
  REQUIRE(res.exit_code == 0);
  json out = json::parse(res.output);
  CHECK(std::abs(out["value"].get<double>() - 1.0) <= 1e-8);
  CHECK(out["p"].get<double>() == 2.0);

  auto second = write_input("combo7.json", combo_input(2, 1.0));
  auto res2 = run_cli("norm --kind seminorm --h 2 --s 0.5 --input " + second);
  REQUIRE(res2.exit_code == 0);
  json out2 = json::parse(res2.output);
  CHECK(std::abs(out2["value"].get<double>() - 3.125) <= 1e-12);
  CHECK(out2["maximizer"] == 2);

  auto res3 = run_cli("norm --kind a2-exponential --h 0.5 --input " + ground);
  REQUIRE(res3.exit_code == 0);
  json out3 = json::parse(res3.output);
  CHECK(std::abs(out3["value"].get<double>() - 1.0) <= 1e-12);

  auto bad = run_cli("norm --kind mystery --input " + ground, true);
  CHECK(bad.exit_code != 0);
  CHECK(bad.output.find("error:") != std::string::npos);
}

TEST_CASE("cli verify runs a suite and reports pass lines") {
  auto res = run_cli("verify fracft --seed 123");
  REQUIRE(res.exit_code == 0);
  json out = json::parse(res.output);
  CHECK(out["suite"] == "fracft");
  CHECK(out["seed"] == 123);
  REQUIRE(out["checks"].size() >= 5);
  for (const auto& c : out["checks"]) CHECK(c["status"] == "pass");

  auto bad = run_cli("verify nosuchsuite --seed 1", true);
  CHECK(bad.exit_code != 0);
  CHECK(bad.output.find("unknown suite") != std::string::npos);
}

TEST_CASE("cli surfaces malformed input as errors") {
  json broken;
  broken["type"] = "gaussian";
  broken["A"] = json::array({json::array({1.0})});
  auto res = run_cli("analyze --input " + write_input("broken.json", broken), true);
  CHECK(res.exit_code != 0);
  CHECK(res.output.find("'L'") != std::string::npos);

  auto res2 = run_cli("analyze --input /nonexistent/path.json", true);
  CHECK(res2.exit_code != 0);
  CHECK(res2.output.find("error:") != std::string::npos);
}

TEST_CASE("cli plotdata emits decay and heatmap tables") {
  json in;
  in["type"] = "hermite_combo";
  in["dim"] = 1;
  in["terms"] = json::array({json{{"alpha", json::array({0})}, {"re", 1.0}, {"im", 0.0}},
                             json{{"alpha", json::array({2})}, {"re", 0.5}, {"im", 0.0}}});
  auto path = write_input("combo8.json", in);

  auto decay = run_cli("plotdata --view decay --input " + path);
  REQUIRE(decay.exit_code == 0);
  auto dlines = lines_of(decay.output);
  REQUIRE(dlines.size() == 3);
  CHECK(dlines[0] == "abs_alpha,u,log_abs_c");
  auto drow = csv_row(dlines[2]);
  CHECK(drow[0] == 2.0);
  CHECK(std::abs(drow[2] - std::log(0.5)) <= 1e-12);

  auto heat = run_cli("plotdata --view heatmap --input " + path);
  REQUIRE(heat.exit_code == 0);
  auto hlines = lines_of(heat.output);
  REQUIRE(hlines.size() == 61 * 61 + 1);
  CHECK(hlines[0] == "x_1,xi_1,abs_F,abs_F_damped");
}
