#pragma once

#include <algorithm>

#include "dumbbell/profile.hpp"

namespace dumbbell {

// Sectional curvature of the warped metric dt^2 + F(t)^2 g_{S^{n-1}} in a
// plane containing the profile direction: -F''(t)/F(t). Throws
// NumericalError inside the pole margin (F < 1e-9) where the quotient is
// numerically singular.
double sectional_radial(const ChainProfile& chain, double t);

// Curvature of a plane tangent to the sphere fiber: (1 - F'(t)^2)/F(t)^2.
double sectional_spherical(const ChainProfile& chain, double t);

struct CurvatureExtrema {
  double min_radial;
  double min_spherical;
  double max_combined;

  double min_combined() const { return std::min(min_radial, min_spherical); }
};

// Extrema of both curvature expressions over a uniform grid on
// [pole_margin, T - pole_margin]. Deterministic for fixed inputs.
// Requires samples >= 1000 and pole_margin >= 1e-3.
CurvatureExtrema curvature_extrema(const ChainProfile& chain, int samples = 4096,
                                   double pole_margin = 1e-3);

// Same extrema restricted to [t0, t1].
CurvatureExtrema curvature_extrema_over(const ChainProfile& chain, double t0, double t1,
                                        int samples);

// vol(S^d) = 2 pi^{(d+1)/2} / Gamma((d+1)/2).
double sphere_volume(int dim);

// n-dimensional volume of the revolved chain: vol(S^{n-1}) * int F^{n-1} dt,
// by per-segment adaptive Gauss-Legendre quadrature (relative 1e-10).
double chain_volume(const ChainProfile& chain);

// Same integral restricted to [t0, t1].
double chain_volume_over(const ChainProfile& chain, double t0, double t1);

// Closed-form upper bound V2(n, k) for the chain volume: per-neck bound
// 2/(n-1) vol(S^{n-1}), one full sphere per cap or bump, and the connector
// surplus 2k (pi/12) 0.8^{n-1} vol(S^{n-1}).
double chain_volume_upper_bound(int fiber_dim, int necks);

// vol(S^p) * chain_volume + vol_h2.
double manifold_volume(const DumbbellSpec& spec, const ChainProfile& chain);

// Linear-in-k volume bound: vol(M) <= per_neck * k + offset, with constants
// independent of eps and k.
struct VolumeGrowthBound {
  double per_neck;  // vol(S^p) * V2(n, 1)
  double offset;    // vol_h2 + vol(S^p) * vol(S^n)
};
VolumeGrowthBound manifold_volume_bound(const DumbbellSpec& spec);

// Eigenvalue of the unit-volume rescaled metric: vol^{2/m} * lambda.
double normalize_eigenvalue(double lambda, double volume_m, int ambient_dim);

struct GeometryReport {
  double eps = 0.0;
  int necks = 0;
  int fiber_dim = 0;
  double min_radial = 0.0;
  double min_spherical = 0.0;
  double max_curvature = 0.0;
  double volume_chain = 0.0;
  double volume_m = 0.0;
  double normalization_factor = 0.0;  // volume_m^{-2/m}
  double kappa = 0.0;                 // -min(min_radial, min_spherical)
};

// The curvature window of the cutoff blend is only pi/36 wide, so honest
// extrema need a dense grid; the default covers it to about one percent.
GeometryReport make_geometry_report(const DumbbellSpec& spec, const ChainProfile& chain,
                                    int samples = 65536, double pole_margin = 1e-3);

}  // namespace dumbbell
