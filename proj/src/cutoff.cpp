#include "dumbbell/cutoff.hpp"

#include <cmath>
#include <stdexcept>

namespace dumbbell {

namespace {

// psi(t) = exp(-1/t) for t > 0, extended by 0; returns value and two
// derivatives. Underflows cleanly to {0,0,0} near t = 0.
Jet2 flat_bump(double t) {
  if (t <= 0.0) return {0.0, 0.0, 0.0};
  const double e = std::exp(-1.0 / t);
  const double inv2 = 1.0 / (t * t);
  return {e, e * inv2, e * inv2 * inv2 * (1.0 - 2.0 * t)};
}

}  // namespace

SmoothCutoff::SmoothCutoff(double a, double b) : a_(a), b_(b) {
  if (!(a < b)) throw std::invalid_argument("SmoothCutoff: window requires a < b");
}

Jet2 SmoothCutoff::eval(double s) const {
  if (s <= a_) return {1.0, 0.0, 0.0};
  if (s >= b_) return {0.0, 0.0, 0.0};

  const Jet2 p = flat_bump(b_ - s);  // d/ds psi(b-s) = -psi'(b-s)
  const Jet2 q = flat_bump(s - a_);
  const double pd1 = -p.d1;
  const double pd2 = p.d2;

  const double den = p.f + q.f;
  const double num1 = pd1 * q.f - p.f * q.d1;
  const double num2 = pd2 * q.f - p.f * q.d2;
  const double dden = pd1 + q.d1;

  const double chi = p.f / den;
  const double chi1 = num1 / (den * den);
  const double chi2 = num2 / (den * den) - 2.0 * num1 * dden / (den * den * den);
  return {chi, chi1, chi2};
}

}  // namespace dumbbell
