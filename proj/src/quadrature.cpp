#include "dumbbell/quadrature.hpp"

#include <cmath>
#include <limits>

#include "dumbbell/errors.hpp"

namespace dumbbell {

namespace {

constexpr double kNode[5] = {-0.90617984593866399280, -0.53846931010568309104, 0.0,
                             0.53846931010568309104, 0.90617984593866399280};
constexpr double kWeight[5] = {0.23692688505618908751, 0.47862867049936646804,
                               0.56888888888888888889, 0.47862867049936646804,
                               0.23692688505618908751};

double sweep(const std::function<double(double)>& f, double a, double h, int panels) {
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    double local = 0.0;
    for (int q = 0; q < 5; ++q) local += kWeight[q] * f(mid + half * kNode[q]);
    sum += local * half;
  }
  return sum;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol) {
  if (a == b) return 0.0;
  if (b < a) return -integrate(f, b, a, rel_tol);

  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int panels = 4; panels <= (1 << 20); panels *= 2) {
    const double value = sweep(f, a, (b - a) / panels, panels);
    if (std::isfinite(prev)) {
      const double scale = std::max(std::abs(value), std::numeric_limits<double>::min());
      if (std::abs(value - prev) <= rel_tol * scale) return value;
    }
    prev = value;
  }
  throw NumericalError("integrate: panel doubling hit its limit without convergence");
}

double int_pow(double x, int e) {
  double r = 1.0;
  for (; e > 0; --e) r *= x;
  return r;
}

}  // namespace dumbbell
