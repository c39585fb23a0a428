// Acceptance suite: runs every verification criterion and prints one
// pass/fail line each. Exits nonzero when any assertion is falsified.

#include <cstdio>

#include "tropgon/verify.hpp"

int main() {
  tropgon::VerifyOptions opt;
  opt.jobs = 2;
  auto results = tropgon::run_verification(opt);

  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.seconds);
    for (const auto& f : r.failures) std::printf("       - %s\n", f.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", (int)results.size() - failed,
              results.size());
  return failed == 0 ? 0 : 1;
}
