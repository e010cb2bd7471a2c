// Command-line front end: profile sampling, geometry reports, spectra,
// the closed-form decay bound, parameter sweeps, and the acceptance suite.
//
// Exit codes: 0 success, 1 acceptance failure, 2 usage error, 3 numerical
// failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dumbbell/errors.hpp"
#include "dumbbell/geometry.hpp"
#include "dumbbell/profile.hpp"
#include "dumbbell/spectral.hpp"
#include "dumbbell/sweep.hpp"

namespace {

using namespace dumbbell;

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::domain_error("cannot open output file '" + path + "'");
  return file;
}

std::ostream& output_stream(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file = open_output(path);
  return file;
}

int run_profile(double eps, int k, int samples, const std::string& out_path) {
  const DumbbellSpec spec{eps, k, 3, 0, 0.0};
  const ChainProfile chain = build_chain(spec);
  const double total = chain.total_length();

  std::ofstream file;
  std::ostream& out = output_stream(out_path, file);
  out << "t,F,F1,F2\n";
  char line[160];
  for (int i = 0; i < samples; ++i) {
    const double t = samples == 1 ? 0.0 : total * i / (samples - 1);
    const Jet2 j = chain.eval(t);
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", t, j.f, j.d1, j.d2);
    out << line;
  }
  return 0;
}

int run_geometry(const DumbbellSpec& spec, bool csv, const std::string& out_path) {
  const ChainProfile chain = build_chain(spec);
  const GeometryReport report = make_geometry_report(spec, chain);

  std::ofstream file;
  std::ostream& out = output_stream(out_path, file);
  char line[512];
  if (csv) {
    out << "eps,k,n,min_K,max_K,vol_chain,vol_M,norm_factor\n";
    std::snprintf(line, sizeof line, "%.17g,%d,%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", report.eps,
                  report.necks, report.fiber_dim, std::min(report.min_radial, report.min_spherical),
                  report.max_curvature, report.volume_chain, report.volume_m,
                  report.normalization_factor);
    out << line;
    return 0;
  }
  std::snprintf(line, sizeof line,
                "eps=%.17g\nk=%d\nn=%d\nm=%d\np=%d\nmin_K_radial=%.17g\nmin_K_spherical=%.17g\n"
                "max_K=%.17g\nkappa=%.17g\nvol_chain=%.17g\nvol_M=%.17g\nnorm_factor=%.17g\n",
                report.eps, report.necks, report.fiber_dim, spec.ambient_dim, spec.degree,
                report.min_radial, report.min_spherical, report.max_curvature, report.kappa,
                report.volume_chain, report.volume_m, report.normalization_factor);
  out << line;
  return 0;
}

int run_spectrum(const DumbbellSpec& spec, int modes, int grid, bool csv,
                 const std::string& out_path) {
  const ChainProfile chain = build_chain(spec);
  const SturmLiouvilleProblem problem = reduce_to_sl(chain, spec);
  const int count = modes > 0 ? modes : spec.necks + 2;
  const Spectrum spectrum = compute_spectrum(problem, grid, count);
  const double volume_m = manifold_volume(spec, chain);
  const double bound = test_form_bound(spec);

  std::ofstream file;
  std::ostream& out = output_stream(out_path, file);
  char line[256];
  if (csv) {
    out << "eps,k,m,p,j,lambda,paper_bound,ratio\n";
    for (int j = 0; j < count; ++j) {
      const double normalized =
          normalize_eigenvalue(spectrum.eigenvalues[j], volume_m, spec.ambient_dim);
      std::snprintf(line, sizeof line, "%.17g,%d,%d,%d,%d,%.17g,%.17g,%.17g\n", spec.eps,
                    spec.necks, spec.ambient_dim, spec.degree, j, normalized, bound,
                    normalized / bound);
      out << line;
    }
    return 0;
  }
  out << "grid_size=" << spectrum.grid_size << "\n";
  std::snprintf(line, sizeof line, "refinement_estimate=%.3e\npaper_bound=%.17g\n",
                spectrum.refinement_estimate, bound);
  out << line;
  for (int j = 0; j < count; ++j) {
    const double normalized =
        normalize_eigenvalue(spectrum.eigenvalues[j], volume_m, spec.ambient_dim);
    std::snprintf(line, sizeof line, "lambda[%d]=%.17g normalized=%.17g\n", j,
                  spectrum.eigenvalues[j], normalized);
    out << line;
  }
  return 0;
}

int run_bound(const DumbbellSpec& spec, const std::string& out_path) {
  const VolumeGrowthBound growth = manifold_volume_bound(spec);
  std::ofstream file;
  std::ostream& out = output_stream(out_path, file);
  char line[384];
  std::snprintf(line, sizeof line,
                "C=%.17g\nA=%.17g\nB=%.17g\nL=%.17g\nbound=%.17g\n",
                test_form_constant(spec.ambient_dim, spec.degree), growth.per_neck, growth.offset,
                spec.log_scale(), test_form_bound(spec));
  out << line;
  return 0;
}

int run_sweep_command(const SweepConfig& config, const std::string& out_path) {
  const auto rows = run_sweep(config);
  int failed = 0;
  for (const auto& row : rows) {
    if (!row.ok) {
      ++failed;
      std::cerr << "sweep point eps=" << row.eps << " k=" << row.k << " m=" << row.m
                << " p=" << row.p << " failed: " << row.error << "\n";
    }
  }
  std::ofstream file;
  std::ostream& out = output_stream(out_path, file);
  write_sweep_csv(out, rows);
  return failed == 0 ? 0 : 3;
}

int run_accept(const SweepConfig& config, bool oracle_only, const std::string& out_path) {
  if (oracle_only) {
    const AcceptanceReport report = check_oracle_only();
    print_report(std::cout, report);
    return report.all_pass() ? 0 : 1;
  }
  const auto rows = run_sweep(config);
  if (!out_path.empty()) {
    std::ofstream file = open_output(out_path);
    write_sweep_csv(file, rows);
  }
  const AcceptanceReport report = check_acceptance(config, rows);
  print_report(std::cout, report);
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral geometry of hyperbolic dumbbell chains"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  std::string config_path;
  std::string out_path;
  bool csv_flag = false;
  app.add_option("--config", config_path, "key = value configuration file")->expected(1);
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_flag("--csv", csv_flag, "CSV output where the subcommand supports it");

  // profile
  auto* profile_cmd = app.add_subcommand("profile", "sample t,F,F',F'' along the chain");
  double profile_eps = 1e-2;
  int profile_k = 1;
  int profile_samples = 1000;
  profile_cmd->add_option("--eps", profile_eps, "neck radius")->required();
  profile_cmd->add_option("--k", profile_k, "neck count")->required();
  profile_cmd->add_option("--samples", profile_samples, "sample count");

  // geometry
  auto* geometry_cmd = app.add_subcommand("geometry", "curvature and volume report");
  double geometry_eps = 1e-2;
  int geometry_k = 1;
  int geometry_n = 0;
  int geometry_m = 0;
  int geometry_p = 0;
  std::optional<double> geometry_vol_h2;
  geometry_cmd->add_option("--eps", geometry_eps)->required();
  geometry_cmd->add_option("--k", geometry_k)->required();
  geometry_cmd->add_option("--n", geometry_n, "fiber dimension (m = n + p)");
  geometry_cmd->add_option("--m", geometry_m, "ambient dimension");
  geometry_cmd->add_option("--p", geometry_p, "sphere degree");
  geometry_cmd->add_option("--vol-h2", geometry_vol_h2, "volume of the remainder");

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "lowest eigenvalues of the chain");
  double spectrum_eps = 1e-2;
  int spectrum_k = 1;
  int spectrum_m = 3;
  int spectrum_p = 0;
  int spectrum_modes = 0;
  int spectrum_grid = 8192;
  int spectrum_betti = 0;
  std::optional<double> spectrum_vol_h2;
  spectrum_cmd->add_option("--eps", spectrum_eps)->required();
  spectrum_cmd->add_option("--k", spectrum_k)->required();
  spectrum_cmd->add_option("--m", spectrum_m)->required();
  spectrum_cmd->add_option("--p", spectrum_p)->required();
  spectrum_cmd->add_option("--modes", spectrum_modes, "eigenvalue count (default k_bar+2)");
  spectrum_cmd->add_option("--grid", spectrum_grid, "cell budget");
  spectrum_cmd->add_option("--betti", spectrum_betti, "Betti offset b_p (k_bar = k + b_p)");
  spectrum_cmd->add_option("--vol-h2", spectrum_vol_h2, "volume of the remainder");

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "closed-form decay bound");
  double bound_eps = 1e-2;
  int bound_k = 1;
  int bound_m = 3;
  int bound_p = 0;
  std::optional<double> bound_vol_h2;
  bound_cmd->add_option("--eps", bound_eps)->required();
  bound_cmd->add_option("--k", bound_k)->required();
  bound_cmd->add_option("--m", bound_m)->required();
  bound_cmd->add_option("--p", bound_p)->required();
  bound_cmd->add_option("--vol-h2", bound_vol_h2, "volume of the remainder");

  // sweep / accept share config overrides
  auto* sweep_cmd = app.add_subcommand("sweep", "run the parameter sweep, emit CSV");
  auto* accept_cmd = app.add_subcommand("accept", "run the acceptance checks");
  std::string eps_list_text, k_list_text, mp_list_text;
  int sweep_grid = 0;
  int sweep_modes = -1;
  int sweep_betti = -1;
  std::optional<double> sweep_vol_h2;
  bool oracle_only = false;
  for (auto* cmd : {sweep_cmd, accept_cmd}) {
    cmd->add_option("--eps-list", eps_list_text, "comma-separated eps values");
    cmd->add_option("--k-list", k_list_text, "comma-separated k values");
    cmd->add_option("--mp-list", mp_list_text, "comma-separated m:p pairs");
    cmd->add_option("--grid", sweep_grid, "cell budget per point");
    cmd->add_option("--modes", sweep_modes, "eigenvalues per point (0: k_bar+2)");
    cmd->add_option("--betti", sweep_betti, "Betti offset b_p");
    cmd->add_option("--vol-h2", sweep_vol_h2, "volume of the remainder");
  }
  accept_cmd->add_flag("--oracle", oracle_only, "only the sphere/interval oracle criteria");

  try {
    app.parse(argc, argv);

    SweepConfig config;
    if (!config_path.empty()) config = load_config(config_path);
    if (!eps_list_text.empty()) apply_config_entry(config, "eps_list", eps_list_text);
    if (!k_list_text.empty()) apply_config_entry(config, "k_list", k_list_text);
    if (!mp_list_text.empty()) apply_config_entry(config, "mp_list", mp_list_text);
    if (sweep_grid > 0) config.grid = sweep_grid;
    if (sweep_modes >= 0) config.modes = sweep_modes;
    if (sweep_betti >= 0) config.betti_offset = sweep_betti;
    if (sweep_vol_h2) config.vol_h2 = sweep_vol_h2;
    if (out_path.empty()) out_path = config.out_path;

    if (profile_cmd->parsed()) return run_profile(profile_eps, profile_k, profile_samples, out_path);

    if (geometry_cmd->parsed()) {
      if (geometry_n == 0 && geometry_m == 0)
        throw std::domain_error("geometry: pass --n or --m");
      const int m = geometry_m > 0 ? geometry_m : geometry_n + geometry_p;
      if (geometry_n > 0 && geometry_m > 0 && geometry_m - geometry_p != geometry_n)
        throw std::domain_error("geometry: inconsistent --n/--m/--p");
      const DumbbellSpec spec{geometry_eps, geometry_k, m, geometry_p,
                              geometry_vol_h2.value_or(sphere_volume(m))};
      return run_geometry(spec, csv_flag, out_path);
    }

    if (spectrum_cmd->parsed()) {
      const DumbbellSpec spec{spectrum_eps, spectrum_k + spectrum_betti, spectrum_m, spectrum_p,
                              spectrum_vol_h2.value_or(sphere_volume(spectrum_m))};
      return run_spectrum(spec, spectrum_modes, spectrum_grid, csv_flag, out_path);
    }

    if (bound_cmd->parsed()) {
      const DumbbellSpec spec{bound_eps, bound_k, bound_m, bound_p,
                              bound_vol_h2.value_or(sphere_volume(bound_m))};
      return run_bound(spec, out_path);
    }

    if (sweep_cmd->parsed()) return run_sweep_command(config, out_path);
    if (accept_cmd->parsed()) return run_accept(config, oracle_only, out_path);

    std::cerr << app.help();
    return 2;
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError&) {
    std::cerr << app.help();
    return 2;
  } catch (const std::domain_error& error) {
    std::cerr << "usage error: " << error.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& error) {
    std::cerr << "usage error: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "numerical failure: " << error.what() << "\n";
    return 3;
  }
}
