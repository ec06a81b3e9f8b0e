#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hardsq/engine_options.hpp"
#include "hardsq/growth_bounds.hpp"

namespace hardsq::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kCapRefused = 2,
  kVerificationFailed = 3,
};

// Runs the command line `args` (without the program name), writing normal
// output to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Verification sweep used by `verify`.
struct VerifyConfig {
  bool ivs = true;
  bool bivs = true;
  unsigned max_area = 12;
  bool fekete = false;
  EngineOptions options{};
};

struct CheckResult {
  std::string name;
  bool passed = true;
  unsigned cases = 0;
  std::string detail;  // first mismatch when failed
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<FeketeWitness> witnesses;

  bool passed() const;
};

VerifyReport run_verification(const VerifyConfig& config);

}  // namespace hardsq::cli
