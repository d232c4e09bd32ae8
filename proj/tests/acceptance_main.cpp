// Acceptance suite runner: one pass/fail line per criterion, exit 1 on any
// failure. The CLI binary used by the output-identity check is taken from
// --cli PATH, defaulting to a sibling named "wheel6".
#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>

#include "wheel6/verify.hpp"

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--cli") == 0) cli = argv[i + 1];
  if (cli.empty()) {
    auto sibling = std::filesystem::path(argv[0]).parent_path() / "wheel6";
    cli = sibling.string();
  }

  wheel6::VerifyOptions options;
  options.cli_path = std::filesystem::exists(cli) ? cli : "";

  auto t0 = std::chrono::steady_clock::now();
  auto results = wheel6::run_acceptance(options);
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  for (const auto& r : results)
    std::printf("%s  %2d  %s  [%s]  (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str(), r.seconds);
  bool ok = wheel6::all_passed(results);
  std::printf("%s  (total %.1fs)\n", ok ? "ACCEPTANCE OK" : "ACCEPTANCE FAILED", total);
  return ok ? 0 : 1;
}
