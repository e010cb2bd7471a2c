#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dumbbell/geometry.hpp"
#include "dumbbell/spectral.hpp"

namespace dumbbell {

// Seven log-spaced neck radii from 5e-2 down to 1e-5.
std::vector<double> default_eps_list();

struct SweepConfig {
  std::vector<double> eps_list = default_eps_list();
  std::vector<int> k_list = {1, 2, 3};
  std::vector<std::pair<int, int>> mp_list = {{3, 0}, {3, 1}, {4, 1}, {4, 2}};
  int grid = 8192;   // total cell budget per eigenproblem
  int modes = 0;     // eigenvalues per point; 0 means k_bar + 2
  std::optional<double> vol_h2;  // unset: vol(S^m) per point
  int betti_offset = 0;          // b_p; every point solves with k_bar = k + b_p
  std::string out_path;

  void validate() const;  // throws std::domain_error
};

// Line-oriented `key = value` file; '#' starts a comment. Unknown keys are
// rejected. Flags applied afterwards win.
SweepConfig load_config(const std::string& path);
void apply_config_entry(SweepConfig& config, const std::string& key, const std::string& value);

struct SweepRow {
  double eps = 0.0;
  int k = 0;      // requested mode count
  int k_bar = 0;  // necks solved with (k + betti offset)
  int m = 0;
  int p = 0;
  int n = 0;
  GeometryReport geometry;
  Eigen::VectorXd eigenvalues;    // ascending, [0] is the constant mode
  Eigen::VectorXd normalized;     // volume_m^{2/m} * eigenvalues
  Eigen::VectorXd cutoff_bounds;  // B_j = max_{i<=j} discrete RQ(chi_i), j = 1..k_bar
  double bound = 0.0;             // closed-form decay bound for the normalized metric
  double gap_ratio = 0.0;         // lambda_kbar / lambda_{kbar+1}
  double refinement = 0.0;        // relative Richardson estimate over positive modes
  bool vol_ok = false;
  bool dominance_ok = false;
  bool kernel_ok = false;
  bool decay_ok = false;
  bool ok = false;
  std::string error;
};

// One row per (eps, k, (m, p)) tuple, in configuration order. Per-point
// numerical failures are recorded on the row instead of aborting the sweep.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

// `# schema=1` header plus one line per (point, mode). 17 significant
// digits, LF endings, byte-deterministic. Failed rows are skipped.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;

  bool all_pass() const;
  int passed() const;
};

// Evaluates every acceptance criterion against the sweep rows plus the
// fresh computations the criteria prescribe (oracle spectra, the gap run
// at eps = 1e-4, the scaling check, convergence orders).
AcceptanceReport check_acceptance(const SweepConfig& config, const std::vector<SweepRow>& rows);

// Only the oracle-based criteria (sphere/interval spectra and convergence
// order); fast standalone mode.
AcceptanceReport check_oracle_only();

// One line per criterion plus an `acceptance: X/Y PASS` summary.
void print_report(std::ostream& out, const AcceptanceReport& report);

}  // namespace dumbbell
