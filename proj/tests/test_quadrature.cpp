#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dumbbell/errors.hpp"
#include "dumbbell/quadrature.hpp"

using namespace dumbbell;

TEST_CASE("gauss panels are exact on polynomials up to degree 9") {
  for (int degree = 0; degree <= 9; ++degree) {
    const double value = integrate([degree](double x) { return int_pow(x, degree); }, 0.0, 1.0);
    CHECK(value == doctest::Approx(1.0 / (degree + 1)).epsilon(1e-14));
  }
}

TEST_CASE("smooth integrands converge to tight closed forms") {
  CHECK(integrate([](double x) { return std::cosh(x); }, -3.0, 3.0) ==
        doctest::Approx(2.0 * std::sinh(3.0)).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(integrate([](double) { return 0.0; }, 0.0, 1.0) == 0.0);
  CHECK(integrate([](double x) { return x; }, 1.0, 0.0) == doctest::Approx(-0.5));
}

TEST_CASE("non-smooth integrands exhaust the panel budget") {
  CHECK_THROWS_AS(integrate([](double x) { return x < 1.0 / 3.0 ? 0.0 : 1.0; }, 0.0, 1.0),
                  NumericalError);
}

TEST_CASE("integer powers") {
  CHECK(int_pow(2.0, 0) == 1.0);
  CHECK(int_pow(2.0, 3) == 8.0);
  CHECK(int_pow(0.5, 2) == 0.25);
}
