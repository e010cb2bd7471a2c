#pragma once

#include <functional>

namespace dumbbell {

// Composite 5-point Gauss-Legendre quadrature on [a, b]. The panel count
// doubles until the relative change between sweeps drops below rel_tol.
// Throws NumericalError once the doubling limit is reached, which signals
// a defective integrand rather than a tolerance problem.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10);

// x^e for small non-negative integer exponents.
double int_pow(double x, int e);

}  // namespace dumbbell
