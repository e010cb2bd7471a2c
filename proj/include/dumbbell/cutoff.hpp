#pragma once

#include "dumbbell/jet.hpp"

namespace dumbbell {

// Smooth step from 1 down to 0 across the window [a, b], built from the
// flat bump psi(t) = exp(-1/t):
//
//   chi(s) = psi(b - s) / (psi(b - s) + psi(s - a)).
//
// chi == 1 for s <= a, chi == 0 for s >= b, chi is strictly decreasing on
// (a, b), and every derivative vanishes at both window ends.
class SmoothCutoff {
 public:
  // Requires a < b; throws std::invalid_argument otherwise.
  SmoothCutoff(double a, double b);

  // chi(s) with first and second derivative.
  Jet2 eval(double s) const;

  double lower() const { return a_; }
  double upper() const { return b_; }

 private:
  double a_;
  double b_;
};

}  // namespace dumbbell
