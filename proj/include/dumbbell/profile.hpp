#pragma once

#include <functional>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "dumbbell/cutoff.hpp"
#include "dumbbell/jet.hpp"

namespace dumbbell {

// The chain profile is a generalized surface of revolution: a warp radius
// F(t) over arc length t in [0, T], with F(0) = F(T) = 0 closing the two
// ends into smooth poles. Pieces:
//
//   Cap        sin arc of length 3*pi/4, pole at the outer end
//   Bump       sin arc of length pi/2 between two necks
//   Neck       eps * cosh(r), r in [-L, L], L = -log(eps)
//   Connector  blend of the neck function into the sin arc over [0, pi/12]
//
// A k-neck chain is Cap C N C (Bump C N C)^(k-1) Cap, total length
// T = 3*pi/2 + k (2L + pi/6) + (k-1) pi/2.

enum class SegmentKind { Cap, Connector, Neck, Bump };

// One piece of the profile, parametrised by local arc length s in [0, length].
struct ProfileSegment {
  SegmentKind kind;
  double length;
  std::function<Jet2(double)> eval;
};

// Largest neck radius for which the connector blend stays inside
// [0.5, 0.8); construction refuses anything above it.
inline constexpr double kEpsMax = 0.05;

inline constexpr double kConnectorLength = std::numbers::pi / 12.0;
inline constexpr double kCutoffLower = std::numbers::pi / 36.0;
inline constexpr double kCutoffUpper = std::numbers::pi / 18.0;
inline constexpr double kCapLength = 3.0 * std::numbers::pi / 4.0;
inline constexpr double kBumpLength = std::numbers::pi / 2.0;

// Construction parameters: neck radius eps, neck count k, ambient dimension
// m, sphere degree p. The warped fiber is S^(n-1) with n = m - p.
struct DumbbellSpec {
  double eps = 1e-2;
  int necks = 1;
  int ambient_dim = 3;
  int degree = 0;
  double vol_h2 = 0.0;  // volume of the untouched remainder of the manifold

  int fiber_dim() const { return ambient_dim - degree; }
  double log_scale() const;  // L = -log(eps)

  // Throws std::domain_error when any parameter is out of range
  // (eps outside (0, kEpsMax], necks < 1, degree outside [0, m-2], ...).
  void validate() const;
};

// Neck warp in the coordinate s = r - L, so that s = 0 is the neck end:
//   f_eps(s) = eps cosh(s + L) = e^s / 2 + eps^2 e^{-s} / 2.
// Throws std::domain_error unless eps lies in (0, 1).
Jet2 eval_f_eps(double eps, double s);

// Sphere arc h(s) = sin(s + pi/6); warns on stderr outside [0, pi/12]
// where it still extends analytically.
Jet2 eval_h(double s);

// Connector blend F(s) = chi(s) f_eps(s) + (1 - chi(s)) h(s) on [0, pi/12];
// equals f_eps below the cutoff window and h above it.
Jet2 eval_connector(double eps, double s, const SmoothCutoff& cutoff);

class ChainProfile {
 public:
  ChainProfile(std::vector<ProfileSegment> segments, int fiber_dim);

  // (F, F', F'') at global arc length t in [0, T]; the left segment owns
  // breakpoints. Throws std::domain_error outside the domain.
  Jet2 eval(double t) const;

  double total_length() const { return breakpoints_.back(); }
  int fiber_dim() const { return fiber_dim_; }
  std::span<const ProfileSegment> segments() const { return segments_; }

  // Cumulative segment offsets; size() == segments().size() + 1, first 0,
  // last total_length().
  std::span<const double> breakpoints() const { return breakpoints_; }

  // [begin, end] intervals of every segment of the given kind, in order.
  std::vector<std::pair<double, double>> intervals(SegmentKind kind) const;

  // Profile of the metric scaled by `factor`: arc length and radius both
  // stretch by sqrt(factor), so F' is unchanged and F'' shrinks by it.
  ChainProfile scaled(double factor) const;

 private:
  std::vector<ProfileSegment> segments_;
  std::vector<double> breakpoints_;
  int fiber_dim_;
};

// Assembles the k-neck chain and verifies the gluing: C^0 jumps below
// 1e-12 relative and C^1/C^2 jumps below 1e-8 at every breakpoint, pole
// closure at both ends, and the connector bound 0.5 <= F < 0.8. Throws
// NumericalError when validation fails.
ChainProfile build_chain(const DumbbellSpec& spec);
ChainProfile build_chain(const DumbbellSpec& spec, const SmoothCutoff& cutoff);

}  // namespace dumbbell
