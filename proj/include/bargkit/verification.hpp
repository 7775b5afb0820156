#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bargkit {

struct CheckResult {
  std::string name;
  bool pass = false;
  double worst_err = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

// Suites: bridge, reproducing, weights, norms, equiv-lemma, fracft, classify.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);

struct AcceptanceCase {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};
std::vector<AcceptanceCase> run_acceptance(std::uint64_t seed);

}  // namespace bargkit
