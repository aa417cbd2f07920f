#pragma once

#include <ostream>
#include <vector>

namespace odiam {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 2,
  kExitUnsupported = 3,
  kExitInput = 4,
  kExitBudget = 5,
};

// Knobs that only tests reach.
struct CliHooks {
  bool corrupt_constructions = false;  // reproduce: reverse one arc per d=4 output
  std::vector<int> only;               // reproduce: subset of criteria
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const CliHooks& hooks = {});

}  // namespace odiam
