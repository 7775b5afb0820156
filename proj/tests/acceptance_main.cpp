// Runs the nine acceptance criteria and prints one verdict line per
// criterion.  Exit status is nonzero when any criterion fails.
#include <cstdio>

#include "bargkit/verification.hpp"

int main() {
  const std::uint64_t seed = 20240817ull;
  bool all_pass = true;
  for (const bargkit::AcceptanceCase& c : bargkit::run_acceptance(seed)) {
    all_pass = all_pass && c.pass;
    std::printf("[%s] %d. %s — %s\n", c.pass ? "PASS" : "FAIL", c.number, c.name.c_str(),
                c.detail.c_str());
  }
  std::fflush(stdout);
  return all_pass ? 0 : 1;
}
