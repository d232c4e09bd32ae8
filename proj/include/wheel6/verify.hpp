#pragma once

#include <string>
#include <vector>

namespace wheel6 {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::string cli_path;  // binary used for the output-identity check
  bool skip_cli_check = false;
};

// Runs every acceptance criterion at its pinned tolerance.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace wheel6
