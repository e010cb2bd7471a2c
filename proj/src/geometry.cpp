#include "dumbbell/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dumbbell/errors.hpp"
#include "dumbbell/quadrature.hpp"

namespace dumbbell {

namespace {

constexpr double kPoleRadius = 1e-9;

Jet2 checked_eval(const ChainProfile& chain, double t) {
  const Jet2 j = chain.eval(t);
  if (j.f < kPoleRadius)
    throw NumericalError("sectional curvature requested inside the pole margin");
  return j;
}

double radial_of(const Jet2& j) { return -j.d2 / j.f; }
double spherical_of(const Jet2& j) { return (1.0 - j.d1 * j.d1) / (j.f * j.f); }

CurvatureExtrema scan(const ChainProfile& chain, double t0, double t1, int samples) {
  CurvatureExtrema out{std::numeric_limits<double>::infinity(),
                       std::numeric_limits<double>::infinity(),
                       -std::numeric_limits<double>::infinity()};
  for (int i = 0; i < samples; ++i) {
    const double t = samples == 1 ? t0 : t0 + (t1 - t0) * i / (samples - 1);
    const Jet2 j = checked_eval(chain, t);
    const double radial = radial_of(j);
    const double spherical = spherical_of(j);
    out.min_radial = std::min(out.min_radial, radial);
    out.min_spherical = std::min(out.min_spherical, spherical);
    out.max_combined = std::max(out.max_combined, std::max(radial, spherical));
  }
  return out;
}

}  // namespace

double sectional_radial(const ChainProfile& chain, double t) {
  return radial_of(checked_eval(chain, t));
}

double sectional_spherical(const ChainProfile& chain, double t) {
  return spherical_of(checked_eval(chain, t));
}

CurvatureExtrema curvature_extrema(const ChainProfile& chain, int samples, double pole_margin) {
  if (samples < 1000) throw std::domain_error("curvature_extrema: need samples >= 1000");
  if (pole_margin < 1e-3) throw std::domain_error("curvature_extrema: need pole_margin >= 1e-3");
  return scan(chain, pole_margin, chain.total_length() - pole_margin, samples);
}

CurvatureExtrema curvature_extrema_over(const ChainProfile& chain, double t0, double t1,
                                        int samples) {
  if (samples < 2) throw std::domain_error("curvature_extrema_over: need samples >= 2");
  if (!(t0 < t1)) throw std::domain_error("curvature_extrema_over: empty interval");
  return scan(chain, t0, t1, samples);
}

double sphere_volume(int dim) {
  if (dim < 0) throw std::domain_error("sphere_volume: dimension must be >= 0");
  const double half = 0.5 * (dim + 1);
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double chain_volume(const ChainProfile& chain) {
  return chain_volume_over(chain, 0.0, chain.total_length());
}

double chain_volume_over(const ChainProfile& chain, double t0, double t1) {
  if (!(t0 <= t1)) throw std::domain_error("chain_volume_over: inverted interval");
  const int power = chain.fiber_dim() - 1;
  const auto segments = chain.segments();
  const auto breakpoints = chain.breakpoints();

  double integral = 0.0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const double lo = std::max(t0, breakpoints[i]);
    const double hi = std::min(t1, breakpoints[i + 1]);
    if (lo >= hi) continue;
    const auto& segment = segments[i];
    const double offset = breakpoints[i];
    integral += integrate(
        [&segment, offset, power](double t) { return int_pow(segment.eval(t - offset).f, power); },
        lo, hi);
  }
  return sphere_volume(chain.fiber_dim() - 1) * integral;
}

double chain_volume_upper_bound(int fiber_dim, int necks) {
  if (fiber_dim < 2 || necks < 1)
    throw std::domain_error("chain_volume_upper_bound: need n >= 2 and k >= 1");
  const double neck_part = 2.0 * necks / (fiber_dim - 1) * sphere_volume(fiber_dim - 1);
  const double sphere_part = (necks + 1) * sphere_volume(fiber_dim);
  const double connector_part =
      2.0 * necks * kConnectorLength * int_pow(0.8, fiber_dim - 1) * sphere_volume(fiber_dim - 1);
  return neck_part + sphere_part + connector_part;
}

double manifold_volume(const DumbbellSpec& spec, const ChainProfile& chain) {
  return sphere_volume(spec.degree) * chain_volume(chain) + spec.vol_h2;
}

VolumeGrowthBound manifold_volume_bound(const DumbbellSpec& spec) {
  spec.validate();
  const double sphere_p = sphere_volume(spec.degree);
  return {sphere_p * chain_volume_upper_bound(spec.fiber_dim(), 1),
          spec.vol_h2 + sphere_p * sphere_volume(spec.fiber_dim())};
}

double normalize_eigenvalue(double lambda, double volume_m, int ambient_dim) {
  if (!(volume_m > 0.0)) throw std::domain_error("normalize_eigenvalue: volume must be positive");
  return std::pow(volume_m, 2.0 / ambient_dim) * lambda;
}

GeometryReport make_geometry_report(const DumbbellSpec& spec, const ChainProfile& chain,
                                    int samples, double pole_margin) {
  const CurvatureExtrema extrema = curvature_extrema(chain, samples, pole_margin);
  GeometryReport report;
  report.eps = spec.eps;
  report.necks = spec.necks;
  report.fiber_dim = spec.fiber_dim();
  report.min_radial = extrema.min_radial;
  report.min_spherical = extrema.min_spherical;
  report.max_curvature = extrema.max_combined;
  report.volume_chain = chain_volume(chain);
  report.volume_m = sphere_volume(spec.degree) * report.volume_chain + spec.vol_h2;
  report.normalization_factor = std::pow(report.volume_m, -2.0 / spec.ambient_dim);
  report.kappa = -extrema.min_combined();
  return report;
}

}  // namespace dumbbell
