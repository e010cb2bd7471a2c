#include "dumbbell/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "dumbbell/errors.hpp"
#include "dumbbell/quadrature.hpp"

namespace dumbbell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuadTol = 1e-9;  // slack granted to quadrature-derived volumes

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* pattern, ...) {
  char buffer[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buffer, sizeof buffer, pattern, args);
  va_end(args);
  return buffer;
}

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char delim) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, delim)) parts.push_back(trim(item));
  return parts;
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  const double value = std::stod(text, &used);
  if (used != text.size()) throw std::domain_error("config: bad number '" + text + "'");
  return value;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  const int value = std::stoi(text, &used);
  if (used != text.size()) throw std::domain_error("config: bad integer '" + text + "'");
  return value;
}

}  // namespace

std::vector<double> default_eps_list() {
  std::vector<double> eps(7);
  const double top = std::log(5e-2);
  const double bottom = std::log(1e-5);
  for (int i = 0; i < 7; ++i) eps[static_cast<std::size_t>(i)] = std::exp(top + (bottom - top) * i / 6.0);
  eps.front() = 5e-2;
  eps.back() = 1e-5;
  return eps;
}

void SweepConfig::validate() const {
  for (double eps : eps_list)
    if (!(eps > 0.0) || eps > kEpsMax)
      throw std::domain_error("SweepConfig: eps values must lie in (0, 0.05]");
  for (int k : k_list)
    if (k < 1) throw std::domain_error("SweepConfig: k values must be >= 1");
  for (const auto& [m, p] : mp_list)
    if (m < 2 || p < 0 || p > m - 2)
      throw std::domain_error("SweepConfig: (m, p) must satisfy m >= 2, 0 <= p <= m-2");
  if (grid < 64) throw std::domain_error("SweepConfig: grid must be >= 64");
  if (modes < 0) throw std::domain_error("SweepConfig: modes must be >= 0");
  if (betti_offset < 0) throw std::domain_error("SweepConfig: betti_offset must be >= 0");
  if (vol_h2 && !(*vol_h2 >= 0.0)) throw std::domain_error("SweepConfig: vol_h2 must be >= 0");
}

void apply_config_entry(SweepConfig& config, const std::string& key, const std::string& value) {
  if (key == "eps_list") {
    config.eps_list.clear();
    for (const auto& item : split(value, ','))
      if (!item.empty()) config.eps_list.push_back(parse_double(item));
  } else if (key == "k_list") {
    config.k_list.clear();
    for (const auto& item : split(value, ','))
      if (!item.empty()) config.k_list.push_back(parse_int(item));
  } else if (key == "mp_list") {
    config.mp_list.clear();
    for (const auto& item : split(value, ',')) {
      if (item.empty()) continue;
      const auto pair = split(item, ':');
      if (pair.size() != 2) throw std::domain_error("config: mp_list entries look like m:p");
      config.mp_list.emplace_back(parse_int(pair[0]), parse_int(pair[1]));
    }
  } else if (key == "grid") {
    config.grid = parse_int(value);
  } else if (key == "modes") {
    config.modes = parse_int(value);
  } else if (key == "vol_h2") {
    config.vol_h2 = parse_double(value);
  } else if (key == "betti_offset") {
    config.betti_offset = parse_int(value);
  } else if (key == "out") {
    config.out_path = value;
  } else {
    throw std::domain_error("config: unknown key '" + key + "'");
  }
}

SweepConfig load_config(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::domain_error("config: cannot open '" + path + "'");
  SweepConfig config;
  std::string line;
  int line_number = 0;
  while (std::getline(file, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto equals = line.find('=');
    if (equals == std::string::npos)
      throw std::domain_error(fmt("config: line %d is not `key = value`", line_number));
    apply_config_entry(config, trim(line.substr(0, equals)), trim(line.substr(equals + 1)));
  }
  return config;
}

namespace {

SweepRow solve_point(const SweepConfig& config, double eps, int k, int m, int p) {
  SweepRow row;
  row.eps = eps;
  row.k = k;
  row.k_bar = k + config.betti_offset;
  row.m = m;
  row.p = p;
  row.n = m - p;

  DumbbellSpec spec{eps, row.k_bar, m, p, config.vol_h2.value_or(sphere_volume(m))};
  const ChainProfile chain = build_chain(spec);
  row.geometry = make_geometry_report(spec, chain);

  const SturmLiouvilleProblem problem = reduce_to_sl(chain, spec);
  const int count = config.modes > 0 ? config.modes : row.k_bar + 2;
  const DiscretePencil coarse = discretize(problem, std::max(1, config.grid / 2));
  const DiscretePencil fine = discretize(problem, config.grid);
  const Eigen::VectorXd coarse_values =
      lowest_eigenvalues(coarse.stiffness, coarse.mass, count);
  row.eigenvalues = lowest_eigenvalues(fine.stiffness, fine.mass, count);

  row.refinement = 0.0;
  for (int j = 1; j < count; ++j) {
    const double scale = std::max(std::abs(row.eigenvalues[j]), 1e-300);
    row.refinement =
        std::max(row.refinement, std::abs(row.eigenvalues[j] - coarse_values[j]) / (3.0 * scale));
  }

  const TestFormFamily forms = build_test_forms(spec, chain);
  row.cutoff_bounds.resize(row.k_bar);
  double running = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < row.k_bar; ++i) {
    running = std::max(running,
                       discrete_rayleigh_quotient(fine, forms.cutoffs[static_cast<std::size_t>(i)]));
    row.cutoff_bounds[i] = running;
  }

  row.normalized.resize(count);
  for (int j = 0; j < count; ++j)
    row.normalized[j] = normalize_eigenvalue(row.eigenvalues[j], row.geometry.volume_m, m);
  row.bound = test_form_bound(spec);
  row.gap_ratio = count >= row.k_bar + 2
                      ? row.eigenvalues[row.k_bar] / row.eigenvalues[row.k_bar + 1]
                      : std::numeric_limits<double>::quiet_NaN();

  const double upper = chain_volume_upper_bound(row.n, row.k_bar);
  const VolumeGrowthBound growth = manifold_volume_bound(spec);
  row.vol_ok = row.geometry.volume_chain >= sphere_volume(row.n) * (1.0 - kQuadTol) &&
               row.geometry.volume_chain <= upper * (1.0 + kQuadTol) &&
               row.geometry.volume_m <=
                   (growth.per_neck * row.k_bar + growth.offset) * (1.0 + kQuadTol);

  row.dominance_ok = true;
  for (int j = 1; j <= row.k_bar && j < count; ++j)
    row.dominance_ok = row.dominance_ok && row.eigenvalues[j] <= row.cutoff_bounds[j - 1];

  const double spectral_scale = row.eigenvalues[count - 1];
  row.kernel_ok = row.eigenvalues[0] <= 1e-10 * std::max(spectral_scale, 1e-300);

  row.decay_ok = true;
  if (eps <= 1e-2)
    for (int j = 1; j <= row.k_bar && j < count; ++j)
      row.decay_ok = row.decay_ok && row.normalized[j] <= row.bound;

  row.ok = true;
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<SweepRow> rows;
  rows.reserve(config.eps_list.size() * config.k_list.size() * config.mp_list.size());
  for (double eps : config.eps_list) {
    for (int k : config.k_list) {
      for (const auto& [m, p] : config.mp_list) {
        try {
          rows.push_back(solve_point(config, eps, k, m, p));
        } catch (const std::exception& failure) {
          SweepRow row;
          row.eps = eps;
          row.k = k;
          row.k_bar = k + config.betti_offset;
          row.m = m;
          row.p = p;
          row.n = m - p;
          row.ok = false;
          row.error = failure.what();
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "# schema=1\n";
  out << "eps,k,m,p,n,kbar,j,lambda,lambda_norm,paper_bound,ratio,cutoff_bound,"
         "min_K_radial,min_K_spherical,max_K,kappa,vol_chain,vol_M,norm_factor,"
         "gap_ratio,refinement,vol_ok,dominance_ok,kernel_ok,decay_ok\n";
  char line[1024];
  for (const auto& row : rows) {
    if (!row.ok) continue;
    for (int j = 0; j < row.eigenvalues.size(); ++j) {
      const double cutoff_bound = (j >= 1 && j <= row.k_bar)
                                      ? row.cutoff_bounds[j - 1]
                                      : std::numeric_limits<double>::quiet_NaN();
      std::snprintf(line, sizeof line,
                    "%.17g,%d,%d,%d,%d,%d,%d,%.17g,%.17g,%.17g,%.17g,%.17g,"
                    "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d,%d,%d,%d\n",
                    row.eps, row.k, row.m, row.p, row.n, row.k_bar, j, row.eigenvalues[j],
                    row.normalized[j], row.bound, row.normalized[j] / row.bound, cutoff_bound,
                    row.geometry.min_radial, row.geometry.min_spherical,
                    row.geometry.max_curvature, row.geometry.kappa, row.geometry.volume_chain,
                    row.geometry.volume_m, row.geometry.normalization_factor, row.gap_ratio,
                    row.refinement, row.vol_ok ? 1 : 0, row.dominance_ok ? 1 : 0,
                    row.kernel_ok ? 1 : 0, row.decay_ok ? 1 : 0);
      out << line;
    }
  }
}

bool AcceptanceReport::all_pass() const {
  for (const auto& criterion : criteria)
    if (!criterion.pass) return false;
  return true;
}

int AcceptanceReport::passed() const {
  int count = 0;
  for (const auto& criterion : criteria)
    if (criterion.pass) ++count;
  return count;
}

void print_report(std::ostream& out, const AcceptanceReport& report) {
  for (std::size_t i = 0; i < report.criteria.size(); ++i) {
    const auto& criterion = report.criteria[i];
    out << (i + 1) << ' ' << criterion.name << ": " << (criterion.pass ? "PASS" : "FAIL") << " ("
        << criterion.detail << ")\n";
  }
  out << "acceptance: " << report.passed() << '/' << report.criteria.size() << " PASS\n";
}

// ---------------------------------------------------------------------------
// Acceptance criteria
// ---------------------------------------------------------------------------

namespace {

CriterionResult connector_bound_criterion() {
  const auto start = std::chrono::steady_clock::now();
  const SmoothCutoff cutoff(kCutoffLower, kCutoffUpper);
  double low = std::numeric_limits<double>::infinity();
  double high = -low;
  for (double eps : {0.05, 0.01, 1e-3, 1e-4}) {
    for (int i = 0; i < 10000; ++i) {
      const double s = kConnectorLength * i / 9999.0;
      const double value = eval_connector(eps, s, cutoff).f;
      low = std::min(low, value);
      high = std::max(high, value);
    }
  }
  const double elapsed = seconds_since(start);
  const bool pass = low >= 0.5 && high < 0.8 && elapsed < 1.0;
  return {"connector-bound", pass,
          fmt("F in [%.9f, %.9f] over 4x10^4 samples, %.3f s", low, high, elapsed)};
}

CriterionResult curvature_criterion(const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  double worst_ratio = 0.0;
  double worst_neck = 0.0;
  bool positive = true;
  for (int n : {2, 3, 4}) {
    for (int k : {1, 2, 3}) {
      double kappa_min = std::numeric_limits<double>::infinity();
      double kappa_max = 0.0;
      for (double eps : config.eps_list) {
        const DumbbellSpec spec{eps, k, n, 0, 0.0};
        const ChainProfile chain = build_chain(spec);
        const CurvatureExtrema extrema = curvature_extrema(chain, 131072, 1e-3);
        const double kappa = -extrema.min_combined();
        positive = positive && kappa > 0.0;
        kappa_min = std::min(kappa_min, kappa);
        kappa_max = std::max(kappa_max, kappa);
        for (const auto& [neck_begin, neck_end] : chain.intervals(SegmentKind::Neck)) {
          const CurvatureExtrema neck = curvature_extrema_over(chain, neck_begin, neck_end, 512);
          worst_neck = std::max(worst_neck, std::abs(neck.min_combined() + 1.0));
        }
      }
      if (kappa_min > 0.0) worst_ratio = std::max(worst_ratio, kappa_max / kappa_min);
    }
  }
  const double elapsed = seconds_since(start);
  const bool pass = positive && worst_ratio <= 1.25 && worst_neck <= 1e-6 && elapsed < 10.0;
  return {"curvature-lower-bound", pass,
          fmt("kappa stability ratio %.6f (<= 1.25), neck min_K within %.2e of -1, %.3f s",
              worst_ratio, worst_neck, elapsed)};
}

CriterionResult volume_criterion(const SweepConfig& config, const std::vector<SweepRow>& rows) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string reason;
  int checked = 0;
  for (const auto& row : rows) {
    if (!row.ok) {
      pass = false;
      reason = "sweep point failed: " + row.error;
      break;
    }
    const DumbbellSpec spec{row.eps, row.k_bar, row.m, row.p,
                            config.vol_h2.value_or(sphere_volume(row.m))};
    const ChainProfile chain = build_chain(spec);
    const double volume = chain_volume(chain);
    const double volume_m = manifold_volume(spec, chain);
    const double upper = chain_volume_upper_bound(row.n, row.k_bar);
    const VolumeGrowthBound growth = manifold_volume_bound(spec);
    const bool sandwich = volume >= sphere_volume(row.n) * (1.0 - kQuadTol) &&
                          volume <= upper * (1.0 + kQuadTol);
    const bool linear = volume_m <= (growth.per_neck * row.k_bar + growth.offset) * (1.0 + kQuadTol);
    if (!(sandwich && linear)) {
      pass = false;
      reason = fmt("violated at eps=%g k=%d n=%d", row.eps, row.k_bar, row.n);
      break;
    }
    ++checked;
  }
  const double elapsed = seconds_since(start);
  pass = pass && elapsed < 5.0;
  if (reason.empty()) reason = fmt("%d points inside [vol(S^n), V2] and Ak+B, %.3f s", checked, elapsed);
  return {"volume-sandwich", pass, reason};
}

struct OracleCase {
  const char* name;
  int fiber_dim;  // 0 means the flat interval
};

CriterionResult oracle_criterion() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  double worst_interval = 0.0;
  double worst_sphere = 0.0;
  for (const OracleCase oracle : {OracleCase{"interval", 0}, OracleCase{"sphere", 2},
                                  OracleCase{"sphere", 3}, OracleCase{"sphere", 5}}) {
    const int n = oracle.fiber_dim;
    const SturmLiouvilleProblem problem =
        n == 0 ? make_interval_problem(kPi, [](double) { return 1.0; })
               : make_interval_problem(kPi, [n](double t) { return int_pow(std::sin(t), n - 1); });
    const Spectrum spectrum = solve_lowest(discretize(problem, 4096), 4);
    for (int l = 0; l < 4; ++l) {
      const double expected = n == 0 ? double(l) * l : double(l) * (l + n - 1);
      if (l == 0) {
        pass = pass && spectrum.eigenvalues[0] <= 1e-10 * spectrum.eigenvalues[3];
        continue;
      }
      const double rel = std::abs(spectrum.eigenvalues[l] - expected) / expected;
      if (n == 0)
        worst_interval = std::max(worst_interval, rel);
      else
        worst_sphere = std::max(worst_sphere, rel);
    }
  }
  const double elapsed = seconds_since(start);
  pass = pass && worst_interval <= 1e-5 && worst_sphere <= 1e-3 && elapsed < 30.0;
  return {"spectral-oracle", pass,
          fmt("interval err %.2e (<= 1e-5), sphere err %.2e (<= 1e-3), %.3f s", worst_interval,
              worst_sphere, elapsed)};
}

CriterionResult dominance_criterion(const std::vector<SweepRow>& rows) {
  bool pass = true;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::string reason;
  for (const auto& row : rows) {
    if (!row.ok) {
      pass = false;
      reason = "sweep point failed: " + row.error;
      break;
    }
    if (row.eigenvalues.size() < row.k_bar + 1) {
      pass = false;
      reason = fmt("insufficient modes at eps=%g k=%d", row.eps, row.k_bar);
      break;
    }
    for (int j = 1; j <= row.k_bar; ++j) {
      if (!(row.eigenvalues[j] <= row.cutoff_bounds[j - 1])) {
        pass = false;
        reason = fmt("lambda_%d exceeds the cutoff bound at eps=%g k=%d m=%d p=%d", j, row.eps,
                     row.k_bar, row.m, row.p);
        break;
      }
      worst_margin = std::min(worst_margin, row.cutoff_bounds[j - 1] / row.eigenvalues[j]);
    }
    if (!pass) break;
  }
  if (reason.empty())
    reason = fmt("lambda_j <= max_{i<=j} RQ(chi_i) on every point; smallest bound/lambda = %.3f",
                 worst_margin);
  return {"min-max-dominance", pass, reason};
}

CriterionResult decay_criterion(const SweepConfig& config, const std::vector<SweepRow>& rows) {
  bool pass = true;
  std::string reason;
  double worst_ratio = 0.0;

  for (const auto& row : rows) {
    if (!row.ok) {
      pass = false;
      reason = "sweep point failed: " + row.error;
      break;
    }
    if (row.eps > 1e-2) continue;
    for (int j = 1; j <= row.k_bar && j < row.eigenvalues.size(); ++j) {
      worst_ratio = std::max(worst_ratio, row.normalized[j] / row.bound);
      if (!(row.normalized[j] <= row.bound)) {
        pass = false;
        reason = fmt("normalized lambda_%d above the bound at eps=%g k=%d m=%d p=%d", j, row.eps,
                     row.k_bar, row.m, row.p);
      }
    }
  }

  // Endpoint halving: every tracked mode at the smallest eps must sit below
  // half of its value at the largest eps.
  if (pass && !config.eps_list.empty()) {
    const double eps_high = *std::max_element(config.eps_list.begin(), config.eps_list.end());
    const double eps_low = *std::min_element(config.eps_list.begin(), config.eps_list.end());
    std::map<std::tuple<int, int, int>, const SweepRow*> at_high, at_low;
    for (const auto& row : rows) {
      if (row.eps == eps_high) at_high[{row.m, row.p, row.k}] = &row;
      if (row.eps == eps_low) at_low[{row.m, row.p, row.k}] = &row;
    }
    for (const auto& [key, high_row] : at_high) {
      const auto it = at_low.find(key);
      if (it == at_low.end()) continue;
      for (int j = 1; j <= high_row->k_bar && j < high_row->eigenvalues.size(); ++j) {
        if (!(it->second->normalized[j] < 0.5 * high_row->normalized[j])) {
          pass = false;
          reason = fmt("lambda_%d did not halve from eps=%g to eps=%g (m=%d p=%d k=%d)", j,
                       eps_high, eps_low, high_row->m, high_row->p, high_row->k);
        }
      }
    }
  }

  if (reason.empty())
    reason = fmt("normalized lambda_j / bound <= %.3e for eps <= 1e-2; all modes halve over the sweep",
                 worst_ratio);
  return {"decay-law", pass, reason};
}

CriterionResult gap_criterion(const SweepConfig& config, const std::vector<SweepRow>& rows) {
  bool pass = true;
  std::string reason;
  double worst_ratio = 0.0;

  // Fresh solve at eps = 1e-4 for every (m, p) and k.
  for (const auto& [m, p] : config.mp_list) {
    for (int k : config.k_list) {
      const int k_bar = k + config.betti_offset;
      const DumbbellSpec spec{1e-4, k_bar, m, p, config.vol_h2.value_or(sphere_volume(m))};
      const ChainProfile chain = build_chain(spec);
      const SturmLiouvilleProblem problem = reduce_to_sl(chain, spec);
      const DiscretePencil pencil = discretize(problem, config.grid);
      const Eigen::VectorXd values =
          lowest_eigenvalues(pencil.stiffness, pencil.mass, k_bar + 2);
      const double ratio = values[k_bar] / values[k_bar + 1];
      worst_ratio = std::max(worst_ratio, ratio);
      if (!(ratio <= 0.2)) {
        pass = false;
        reason = fmt("gap ratio %.3f > 0.2 at eps=1e-4 m=%d p=%d k=%d", ratio, m, p, k_bar);
      }
    }
  }

  // Monotone decrease across the three smallest sweep eps values.
  if (pass && config.eps_list.size() >= 3) {
    std::vector<double> eps_sorted = config.eps_list;
    std::sort(eps_sorted.begin(), eps_sorted.end());
    const std::vector<double> smallest(eps_sorted.begin(), eps_sorted.begin() + 3);
    std::map<std::tuple<int, int, int>, std::map<double, double>> gaps;
    for (const auto& row : rows) {
      if (!row.ok || std::isnan(row.gap_ratio)) continue;
      if (std::find(smallest.begin(), smallest.end(), row.eps) != smallest.end())
        gaps[{row.m, row.p, row.k}][row.eps] = row.gap_ratio;
    }
    for (const auto& [key, series] : gaps) {
      if (series.size() < 3) continue;
      double previous = -1.0;
      for (const auto& [eps, gap] : series) {  // ascending eps
        if (previous >= 0.0 && !(previous < gap)) {
          pass = false;
          reason = fmt("gap ratio not decreasing towards small eps (m=%d p=%d k=%d)",
                       std::get<0>(key), std::get<1>(key), std::get<2>(key));
        }
        previous = gap;
      }
    }
  }

  if (reason.empty())
    reason = fmt("gap ratio <= %.2e at eps=1e-4 and decreasing over the smallest sweep eps",
                 worst_ratio);
  return {"spectral-gap", pass, reason};
}

CriterionResult scaling_criterion(const SweepConfig& config) {
  const DumbbellSpec spec{0.01, 1, 3, 1, config.vol_h2.value_or(sphere_volume(3))};
  const ChainProfile chain = build_chain(spec);
  const ChainProfile stretched = chain.scaled(4.0);
  const int count = 4;
  const DiscretePencil base = discretize(reduce_to_sl(chain, spec), 4096);
  const DiscretePencil scaled = discretize(reduce_to_sl(stretched, spec), 4096);
  const Eigen::VectorXd lambda = lowest_eigenvalues(base.stiffness, base.mass, count);
  const Eigen::VectorXd lambda_scaled = lowest_eigenvalues(scaled.stiffness, scaled.mass, count);

  double worst = 0.0;
  for (int j = 1; j < count; ++j)
    worst = std::max(worst, std::abs(lambda_scaled[j] - lambda[j] / 4.0) / (lambda[j] / 4.0));
  const bool pass = worst <= 1e-10;
  return {"scaling-law", pass,
          fmt("max relative deviation of lambda/4 under metric scaling by 4: %.2e", worst)};
}

CriterionResult convergence_criterion() {
  bool pass = true;
  double order_low = std::numeric_limits<double>::infinity();
  double order_high = 0.0;
  for (int n : {0, 2}) {  // flat interval and the round 2-sphere sector
    const SturmLiouvilleProblem problem =
        n == 0 ? make_interval_problem(kPi, [](double) { return 1.0; })
               : make_interval_problem(kPi, [n](double t) { return int_pow(std::sin(t), n - 1); });
    Eigen::VectorXd values[3];
    const int grids[3] = {1024, 2048, 4096};
    for (int g = 0; g < 3; ++g)
      values[g] = solve_lowest(discretize(problem, grids[g]), 4).eigenvalues;
    for (int l = 1; l <= 3; ++l) {
      const double coarse_step = std::abs(values[0][l] - values[1][l]);
      const double fine_step = std::abs(values[1][l] - values[2][l]);
      const double order = std::log2(coarse_step / fine_step);
      order_low = std::min(order_low, order);
      order_high = std::max(order_high, order);
      pass = pass && order >= 1.7 && order <= 2.3;
    }
  }
  return {"convergence-order", pass,
          fmt("Richardson orders in [%.3f, %.3f] (required [1.7, 2.3])", order_low, order_high)};
}

}  // namespace

AcceptanceReport check_acceptance(const SweepConfig& config, const std::vector<SweepRow>& rows) {
  AcceptanceReport report;
  report.criteria.push_back(connector_bound_criterion());
  report.criteria.push_back(curvature_criterion(config));
  report.criteria.push_back(volume_criterion(config, rows));
  report.criteria.push_back(oracle_criterion());
  report.criteria.push_back(dominance_criterion(rows));
  report.criteria.push_back(decay_criterion(config, rows));
  report.criteria.push_back(gap_criterion(config, rows));
  report.criteria.push_back(scaling_criterion(config));
  report.criteria.push_back(convergence_criterion());
  return report;
}

AcceptanceReport check_oracle_only() {
  AcceptanceReport report;
  report.criteria.push_back(oracle_criterion());
  report.criteria.push_back(convergence_criterion());
  return report;
}

}  // namespace dumbbell
