#include "dumbbell/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dumbbell/errors.hpp"
#include "dumbbell/geometry.hpp"
#include "dumbbell/quadrature.hpp"

namespace dumbbell {

namespace {

constexpr double kGaussNode = 0.77459666924148337704;  // sqrt(3/5)
constexpr double kGaussWeightMid = 8.0 / 9.0;
constexpr double kGaussWeightEnd = 5.0 / 9.0;

std::vector<int> allocate_cells(const SturmLiouvilleProblem& problem, int cell_budget) {
  const bool multi = problem.grid_segments.size() > 1;
  double total = 0.0;
  for (const auto& segment : problem.grid_segments) total += segment.alloc_weight;

  std::vector<int> cells;
  cells.reserve(problem.grid_segments.size());
  for (const auto& segment : problem.grid_segments) {
    const int floor_cells = multi ? 8 : 1;
    int c = std::max<int>(floor_cells,
                          static_cast<int>(std::llround(cell_budget * segment.alloc_weight / total)));
    if (segment.even_cells && (c % 2) != 0) ++c;
    cells.push_back(c);
  }
  return cells;
}

Eigen::VectorXd build_nodes(const SturmLiouvilleProblem& problem, const std::vector<int>& cells) {
  std::vector<double> nodes;
  nodes.push_back(problem.grid_segments.front().begin);
  for (std::size_t s = 0; s < problem.grid_segments.size(); ++s) {
    const auto& segment = problem.grid_segments[s];
    const int c = cells[s];
    for (int j = 1; j <= c; ++j) {
      nodes.push_back(j == c ? segment.end
                             : segment.begin + (segment.end - segment.begin) * j / c);
    }
  }
  return Eigen::Map<const Eigen::VectorXd>(nodes.data(), static_cast<Eigen::Index>(nodes.size()));
}

}  // namespace

SturmLiouvilleProblem reduce_to_sl(const ChainProfile& chain, const DumbbellSpec& spec) {
  spec.validate();
  if (chain.fiber_dim() != spec.fiber_dim())
    throw std::invalid_argument("reduce_to_sl: chain and spec disagree on the fiber dimension");

  auto shared = std::make_shared<const ChainProfile>(chain);
  const int power = spec.fiber_dim() - 1;

  SturmLiouvilleProblem problem;
  problem.length = chain.total_length();
  problem.chain = shared;
  problem.weight = [shared, power](double t) { return int_pow(shared->eval(t).f, power); };

  const auto segments = chain.segments();
  const auto breakpoints = chain.breakpoints();
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const bool neck = segments[i].kind == SegmentKind::Neck;
    problem.grid_segments.push_back({breakpoints[i], breakpoints[i + 1],
                                     segments[i].length * (neck ? 2.0 : 1.0), neck});
  }
  return problem;
}

SturmLiouvilleProblem make_interval_problem(double length, std::function<double(double)> weight) {
  if (!(length > 0.0)) throw std::domain_error("make_interval_problem: length must be positive");
  SturmLiouvilleProblem problem;
  problem.length = length;
  problem.weight = std::move(weight);
  problem.grid_segments.push_back({0.0, length, 1.0, false});
  return problem;
}

double weight_integral(const SturmLiouvilleProblem& problem) {
  double total = 0.0;
  for (const auto& segment : problem.grid_segments)
    total += integrate(problem.weight, segment.begin, segment.end);
  return total;
}

namespace {

struct CellIntegrals {
  double weight = 0.0;
  double m00 = 0.0;
  double m01 = 0.0;
  double m11 = 0.0;
};

// Composite 3-point Gauss on one P1 cell, panels doubling until all four
// integrals settle to 1e-12 relative. Smooth weights stop at two panels;
// the cutoff blend needs a few more near its transition window.
CellIntegrals integrate_cell(const std::function<double(double)>& weight, double a, double b) {
  const double h = b - a;
  CellIntegrals previous;
  for (int panels = 1; panels <= (1 << 12); panels *= 2) {
    CellIntegrals current;
    const double step = h / panels;
    for (int p = 0; p < panels; ++p) {
      const double mid = a + (p + 0.5) * step;
      const double half = 0.5 * step;
      const double points[3] = {mid - half * kGaussNode, mid, mid + half * kGaussNode};
      const double gauss[3] = {kGaussWeightEnd, kGaussWeightMid, kGaussWeightEnd};
      for (int q = 0; q < 3; ++q) {
        const double wq = weight(points[q]) * gauss[q] * half;
        const double phi1 = (points[q] - a) / h;
        const double phi0 = (b - points[q]) / h;
        current.weight += wq;
        current.m00 += wq * phi0 * phi0;
        current.m01 += wq * phi0 * phi1;
        current.m11 += wq * phi1 * phi1;
      }
    }
    if (panels > 1) {
      const double scale = std::max({std::abs(current.weight), std::abs(current.m00),
                                     std::abs(current.m11), 1e-300});
      const double change = std::max({std::abs(current.weight - previous.weight),
                                      std::abs(current.m00 - previous.m00),
                                      std::abs(current.m01 - previous.m01),
                                      std::abs(current.m11 - previous.m11)});
      if (change <= 1e-12 * scale) return current;
    }
    previous = current;
  }
  return previous;
}

}  // namespace

DiscretePencil discretize(const SturmLiouvilleProblem& problem, int cell_budget) {
  if (cell_budget < 1) throw std::domain_error("discretize: cell budget must be >= 1");
  if (problem.grid_segments.empty() || !problem.weight)
    throw std::invalid_argument("discretize: problem has no domain or weight");

  DiscretePencil pencil;
  pencil.nodes = build_nodes(problem, allocate_cells(problem, cell_budget));
  const Eigen::Index n = pencil.nodes.size();
  pencil.stiffness = {Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n - 1)};
  pencil.mass = {Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n - 1)};

  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double a = pencil.nodes[i];
    const double b = pencil.nodes[i + 1];
    const double h = b - a;
    const CellIntegrals cell = integrate_cell(problem.weight, a, b);

    const double c = cell.weight / (h * h);
    pencil.stiffness.diag[i] += c;
    pencil.stiffness.diag[i + 1] += c;
    pencil.stiffness.off[i] -= c;
    pencil.mass.diag[i] += cell.m00;
    pencil.mass.diag[i + 1] += cell.m11;
    pencil.mass.off[i] += cell.m01;
  }

  for (Eigen::Index i = 0; i < n; ++i) {
    if (pencil.mass.diag[i] < 1e-300)
      throw NumericalError("discretize: mass diagonal underflow, weight vanished on the grid");
  }
  return pencil;
}

Spectrum solve_lowest(const DiscretePencil& pencil, int count, double rel_tol) {
  Spectrum spectrum;
  spectrum.eigenvalues = lowest_eigenvalues(pencil.stiffness, pencil.mass, count, rel_tol);
  spectrum.grid_size = static_cast<int>(pencil.nodes.size());
  return spectrum;
}

Spectrum compute_spectrum(const SturmLiouvilleProblem& problem, int cell_budget, int count) {
  const DiscretePencil coarse = discretize(problem, std::max(1, cell_budget / 2));
  const DiscretePencil fine = discretize(problem, cell_budget);
  const Eigen::VectorXd coarse_values = lowest_eigenvalues(coarse.stiffness, coarse.mass, count);

  Spectrum spectrum = solve_lowest(fine, count);
  double estimate = 0.0;
  for (int j = 1; j < count; ++j) {
    const double scale = std::max(std::abs(spectrum.eigenvalues[j]), 1e-300);
    estimate = std::max(estimate,
                        std::abs(spectrum.eigenvalues[j] - coarse_values[j]) / (3.0 * scale));
  }
  spectrum.refinement_estimate = estimate;
  return spectrum;
}

double PiecewiseLinear::value(double t) const {
  if (t <= knots.front()) return values.front();
  if (t >= knots.back()) return values.back();
  const auto it = std::upper_bound(knots.begin(), knots.end(), t);
  const auto i = static_cast<std::size_t>(it - knots.begin()) - 1;
  const double span = knots[i + 1] - knots[i];
  const double local = (t - knots[i]) / span;
  return values[i] + (values[i + 1] - values[i]) * local;
}

double PiecewiseLinear::slope(double t) const {
  if (t <= knots.front() || t >= knots.back()) return 0.0;
  const auto it = std::upper_bound(knots.begin(), knots.end(), t);
  const auto i = static_cast<std::size_t>(it - knots.begin()) - 1;
  return (values[i + 1] - values[i]) / (knots[i + 1] - knots[i]);
}

double rayleigh_quotient(const SturmLiouvilleProblem& problem, const PiecewiseLinear& u) {
  // Integrate on the common refinement of the grid segments and the knots
  // so every panel sees a smooth integrand.
  std::vector<double> cuts;
  for (const auto& segment : problem.grid_segments) {
    cuts.push_back(segment.begin);
    cuts.push_back(segment.end);
  }
  for (double knot : u.knots)
    if (knot > 0.0 && knot < problem.length) cuts.push_back(knot);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double numerator = 0.0, denominator = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    const double du = u.slope(0.5 * (lo + hi));
    if (du != 0.0) numerator += du * du * integrate(problem.weight, lo, hi);
    denominator += integrate(
        [&](double t) {
          const double v = u.value(t);
          return v * v * problem.weight(t);
        },
        lo, hi);
  }
  if (!(denominator > 0.0))
    throw NumericalError("rayleigh_quotient: test function vanishes in the weighted norm");
  return numerator / denominator;
}

double discrete_rayleigh_quotient(const DiscretePencil& pencil, const PiecewiseLinear& u) {
  Eigen::VectorXd x(pencil.nodes.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = u.value(pencil.nodes[i]);
  const double denominator = quadratic_form(pencil.mass, x);
  if (!(denominator > 0.0))
    throw NumericalError("discrete_rayleigh_quotient: test function vanishes on the grid");
  return quadratic_form(pencil.stiffness, x) / denominator;
}

TestFormFamily build_test_forms(const DumbbellSpec& spec, const ChainProfile& chain) {
  spec.validate();
  const auto necks = chain.intervals(SegmentKind::Neck);
  if (static_cast<int>(necks.size()) != spec.necks)
    throw std::invalid_argument("build_test_forms: need exactly one neck per cutoff");

  const double total = chain.total_length();
  TestFormFamily family;
  for (int i = 0; i < spec.necks; ++i) {
    const double start = necks[static_cast<std::size_t>(i)].first;
    const double mid = 0.5 * (start + necks[static_cast<std::size_t>(i)].second);
    PiecewiseLinear chi;
    if (i == 0) {
      chi.knots = {0.0, start, mid, total};
      chi.values = {1.0, 1.0, 0.0, 0.0};
      family.supports.emplace_back(0.0, mid);
    } else {
      const auto& previous = necks[static_cast<std::size_t>(i - 1)];
      const double previous_mid = 0.5 * (previous.first + previous.second);
      chi.knots = {0.0, previous_mid, previous.second, start, mid, total};
      chi.values = {0.0, 0.0, 1.0, 1.0, 0.0, 0.0};
      family.supports.emplace_back(previous_mid, mid);
    }
    family.cutoffs.push_back(std::move(chi));
  }
  return family;
}

double test_form_constant(int ambient_dim, int degree) {
  const int d = ambient_dim - degree - 1;
  if (d < 1) throw std::domain_error("test_form_constant: degree must satisfy p <= m-2");
  return std::pow(2.0, 0.5 * d + 1.0) / (std::numbers::pi * d);
}

double test_form_bound(const DumbbellSpec& spec) {
  spec.validate();
  const VolumeGrowthBound growth = manifold_volume_bound(spec);
  const double log_scale = spec.log_scale();
  return std::pow(growth.per_neck * spec.necks + growth.offset, 2.0 / spec.ambient_dim) *
         test_form_constant(spec.ambient_dim, spec.degree) / (log_scale * log_scale);
}

}  // namespace dumbbell
