#pragma once

#include <functional>
#include <string>
#include <vector>

namespace thom {

// One self-contained consistency check. run() returns the empty string on
// success and a short diagnostic otherwise; exceptions escaping run() count
// as failures. Checks marked fast finish in well under a second and form
// the "fast" suite; the full suite is every check.
struct VerifyCheck {
  std::string name;
  bool fast = false;
  std::function<std::string()> run;
};

// The cross-validation suite: every pipeline of the library checked against
// an independent route to the same numbers. Order is stable.
const std::vector<VerifyCheck>& verify_manifest();

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;   // empty on pass
  double seconds = 0.0;
};

// Runs every check (fast_only restricts to the fast suite) and reports one
// outcome per check, in manifest order.
std::vector<CheckOutcome> run_checks(bool fast_only);

}  // namespace thom
