// Acceptance runner: executes the full default sweep, evaluates every
// criterion, prints one PASS/FAIL line each, and exits nonzero on failure.
//
//   acceptance [--oracle] [--config PATH]

#include <iostream>
#include <string>

#include "dumbbell/sweep.hpp"

int main(int argc, char** argv) {
  using namespace dumbbell;

  bool oracle_only = false;
  std::string config_path;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--oracle") {
      oracle_only = true;
    } else if (arg == "--config" && i + 1 < argc) {
      config_path = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--oracle] [--config PATH]\n";
      return 2;
    }
  }

  try {
    if (oracle_only) {
      const AcceptanceReport report = check_oracle_only();
      print_report(std::cout, report);
      return report.all_pass() ? 0 : 1;
    }
    SweepConfig config;
    if (!config_path.empty()) config = load_config(config_path);
    const auto rows = run_sweep(config);
    const AcceptanceReport report = check_acceptance(config, rows);
    print_report(std::cout, report);
    return report.all_pass() ? 0 : 1;
  } catch (const std::exception& error) {
    std::cerr << "acceptance aborted: " << error.what() << "\n";
    return 3;
  }
}
