#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "dumbbell/cutoff.hpp"
#include "dumbbell/profile.hpp"

using namespace dumbbell;

TEST_CASE("cutoff window must be non-degenerate") {
  CHECK_THROWS_AS(SmoothCutoff(0.3, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(SmoothCutoff(0.5, 0.2), std::invalid_argument);
}

TEST_CASE("cutoff is exactly 1 below the window and exactly 0 above") {
  const SmoothCutoff chi(kCutoffLower, kCutoffUpper);
  for (double s : {-1.0, 0.0, 0.5 * kCutoffLower, kCutoffLower}) {
    const Jet2 j = chi.eval(s);
    CHECK(j.f == 1.0);
    CHECK(j.d1 == 0.0);
    CHECK(j.d2 == 0.0);
  }
  for (double s : {kCutoffUpper, 2.0 * kCutoffUpper, 10.0}) {
    const Jet2 j = chi.eval(s);
    CHECK(j.f == 0.0);
    CHECK(j.d1 == 0.0);
    CHECK(j.d2 == 0.0);
  }
}

TEST_CASE("cutoff derivatives vanish at the window ends") {
  const SmoothCutoff chi(kCutoffLower, kCutoffUpper);
  const double width = kCutoffUpper - kCutoffLower;
  for (double offset : {1e-6, 1e-4, 1e-3}) {
    const Jet2 near_a = chi.eval(kCutoffLower + offset * width);
    const Jet2 near_b = chi.eval(kCutoffUpper - offset * width);
    CHECK(std::abs(near_a.d1) < 1e-10);
    CHECK(std::abs(near_a.d2) < 1e-10);
    CHECK(std::abs(near_b.d1) < 1e-10);
    CHECK(std::abs(near_b.d2) < 1e-10);
  }
}

TEST_CASE("cutoff partitions unity and decreases monotonically") {
  const SmoothCutoff chi(kCutoffLower, kCutoffUpper);
  double previous = 1.0;
  for (int i = 0; i <= 400; ++i) {
    const double s = kCutoffLower + (kCutoffUpper - kCutoffLower) * i / 400.0;
    const double value = chi.eval(s).f;
    CHECK(value + (1.0 - value) == 1.0);
    CHECK(value <= previous);
    // strictly decreasing once clear of the flat numeric tails
    if (previous > 1e-12 && previous < 1.0 - 1e-12 && value > 1e-12) CHECK(value < previous);
    previous = value;
  }
  CHECK(chi.eval(0.5 * (kCutoffLower + kCutoffUpper)).f == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("cutoff derivative jets match finite differences") {
  const SmoothCutoff chi(0.1, 0.3);
  const double step = 1e-5;
  for (double s : {0.14, 0.2, 0.26}) {
    const Jet2 j = chi.eval(s);
    const double left = chi.eval(s - step).f;
    const double right = chi.eval(s + step).f;
    const double fd1 = (right - left) / (2.0 * step);
    const double fd2 = (right - 2.0 * j.f + left) / (step * step);
    // absolute floor because the central difference bottoms out at
    // f * eps_machine / step^2 where chi'' itself is near zero
    CHECK(std::abs(j.d1 - fd1) <= 1e-5 * std::max(1.0, std::abs(j.d1)));
    CHECK(std::abs(j.d2 - fd2) <= 1e-3 * std::max(1.0, std::abs(j.d2)));
  }
}
