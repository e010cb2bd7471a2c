#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "dumbbell/profile.hpp"
#include "dumbbell/tridiagonal.hpp"

namespace dumbbell {

// Sub-interval of the domain with its own share of the cell budget.
struct GridSegment {
  double begin;
  double end;
  double alloc_weight;  // relative share of the total cell budget
  bool even_cells;      // force an even cell count so midpoints land on nodes
};

// Weighted eigenproblem -(w u')' = lambda w u on [0, length], natural ends.
// For a chain in degree p the weight is w(t) = F(t)^{n-1} with n = m - p:
// the Rayleigh quotient of u against w is the form quotient of the
// co-closed test form u(t) v_{S^p}, the sphere volume factors cancelling.
struct SturmLiouvilleProblem {
  double length = 0.0;
  std::function<double(double)> weight;
  std::vector<GridSegment> grid_segments;
  std::shared_ptr<const ChainProfile> chain;  // null for synthetic problems
};

SturmLiouvilleProblem reduce_to_sl(const ChainProfile& chain, const DumbbellSpec& spec);

// Synthetic problem on a single segment; used by the analytic oracles.
SturmLiouvilleProblem make_interval_problem(double length, std::function<double(double)> weight);

// int_0^T w dt by the module quadrature.
double weight_integral(const SturmLiouvilleProblem& problem);

struct DiscretePencil {
  SymTridiagonal stiffness;  // int w phi_i' phi_j'
  SymTridiagonal mass;       // int w phi_i phi_j
  Eigen::VectorXd nodes;
};

// P1 finite elements with 3-point Gauss cells. Cells are spread over the
// grid segments proportionally to alloc_weight with a floor of 8 per
// segment (no floor for single-segment problems); `cell_budget` is the
// target total. Throws NumericalError when a mass diagonal underflows.
DiscretePencil discretize(const SturmLiouvilleProblem& problem, int cell_budget);

struct Spectrum {
  Eigen::VectorXd eigenvalues;  // ascending; [0] is the constant mode
  int grid_size = 0;            // nodes of the grid that produced them
  double refinement_estimate = std::numeric_limits<double>::quiet_NaN();
};

// The `count` smallest eigenvalues of the pencil by inertia bisection.
Spectrum solve_lowest(const DiscretePencil& pencil, int count, double rel_tol = 1e-12);

// Assembles at cell_budget/2 and cell_budget and sets refinement_estimate
// to the largest relative Richardson error over the positive modes.
Spectrum compute_spectrum(const SturmLiouvilleProblem& problem, int cell_budget, int count);

// Continuous piecewise-linear function on [0, T].
struct PiecewiseLinear {
  std::vector<double> knots;  // strictly ascending
  std::vector<double> values;

  double value(double t) const;
  double slope(double t) const;  // constant per knot interval
};

// int u'^2 w / int u^2 w by the module quadrature. Throws NumericalError
// on a vanishing denominator.
double rayleigh_quotient(const SturmLiouvilleProblem& problem, const PiecewiseLinear& u);

// Same quotient evaluated through the assembled pencil, with u sampled at
// the grid nodes. This is the quantity the discrete min-max principle
// compares eigenvalues against.
double discrete_rayleigh_quotient(const DiscretePencil& pencil, const PiecewiseLinear& u);

struct TestFormFamily {
  std::vector<PiecewiseLinear> cutoffs;
  std::vector<std::pair<double, double>> supports;  // closed support per cutoff
};

// The k-neck family of linear cutoffs: the first covers the left cap and
// ramps down across half of neck 1; cutoff i sits on the bump between
// necks i-1 and i with ramps over the adjacent half-necks. Slopes are 0 or
// +-1/L and support interiors are pairwise disjoint. Requires one neck per
// cutoff (the chain must be built with k equal to the family size).
TestFormFamily build_test_forms(const DumbbellSpec& spec, const ChainProfile& chain);

// C(m, p) = 2^{(m-p-1)/2 + 1} / (pi (m-p-1)): quotient of the closed-form
// ramp energy bound and the cap mass bound of the first cutoff.
double test_form_constant(int ambient_dim, int degree);

// Decay bound for the unit-volume metric: (A k + B)^{2/m} C(m, p) / L^2
// with (A, B) from manifold_volume_bound. Tends to zero like 1/log(eps)^2.
double test_form_bound(const DumbbellSpec& spec);

}  // namespace dumbbell
