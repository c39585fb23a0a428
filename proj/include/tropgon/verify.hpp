#pragma once

#include <string>
#include <vector>

namespace tropgon {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> failures;
  double seconds = 0.0;
};

struct VerifyOptions {
  long long max_genus = 8;
  int gonality_cap = 14;
  int jobs = 1;
};

// Runs the full verification suite (the acceptance criteria); one result per
// criterion. A falsified mathematical assertion shows up as a failure with a
// diagnostic naming the offending object.
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

}  // namespace tropgon
