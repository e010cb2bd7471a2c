#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dumbbell/errors.hpp"
#include "dumbbell/profile.hpp"

using namespace dumbbell;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("neck warp value and derivatives") {
  SUBCASE("value at the neck end") {
    const Jet2 j = eval_f_eps(0.01, 0.0);
    CHECK(j.f == doctest::Approx(0.50005).epsilon(1e-15));
    CHECK(j.d2 == j.f);  // cosh solves f'' = f, and both sides share the expression
    CHECK(j.d1 == doctest::Approx(0.5 - 0.5e-4).epsilon(1e-15));
  }
  SUBCASE("high-precision reference point") {
    // 0.5 exp(pi/12) + 0.5 * 0.05^2 * exp(-pi/12), evaluated to 22 digits
    const double reference = 0.6505950156145072112444;
    CHECK(eval_f_eps(0.05, kPi / 12.0).f == doctest::Approx(reference).epsilon(1e-15));
  }
  SUBCASE("domain errors") {
    CHECK_THROWS_AS(eval_f_eps(0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(eval_f_eps(-0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(eval_f_eps(1.0, 0.0), std::domain_error);
  }
}

TEST_CASE("sphere arc values") {
  CHECK(eval_h(0.0).f == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(eval_h(kPi / 12.0).f == doctest::Approx(std::numbers::sqrt2 / 2.0).epsilon(1e-15));
  CHECK(eval_h(0.0).d2 == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(eval_h(0.0).d1 == doctest::Approx(std::cos(kPi / 6.0)).epsilon(1e-15));
}

TEST_CASE("connector blend") {
  const SmoothCutoff cutoff(kCutoffLower, kCutoffUpper);

  SUBCASE("coincides with the neck warp below the window") {
    const double s = kPi / 40.0;
    const Jet2 blend = eval_connector(0.01, s, cutoff);
    const Jet2 neck = eval_f_eps(0.01, s);
    CHECK(blend.f == neck.f);
    CHECK(blend.d1 == neck.d1);
    CHECK(blend.d2 == neck.d2);
  }
  SUBCASE("coincides with the sphere arc above the window") {
    const Jet2 blend = eval_connector(0.01, kPi / 12.0, cutoff);
    CHECK(blend.f == doctest::Approx(std::numbers::sqrt2 / 2.0).epsilon(1e-15));
  }
  SUBCASE("stays inside [0.5, 0.8)") {
    for (double eps : {0.05, 0.01, 1e-3, 1e-5}) {
      for (int i = 0; i < 200; ++i) {
        const double s = kPi / 12.0 * i / 199.0;
        const double value = eval_connector(eps, s, cutoff).f;
        CHECK(value >= 0.5);
        CHECK(value < 0.8);
      }
    }
  }
  SUBCASE("domain error outside [0, pi/12]") {
    CHECK_THROWS_AS(eval_connector(0.01, -0.1, cutoff), std::domain_error);
    CHECK_THROWS_AS(eval_connector(0.01, kPi / 12.0 + 0.1, cutoff), std::domain_error);
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS((DumbbellSpec{0.2, 1, 3, 0, 0.0}.validate()), std::domain_error);
  CHECK_THROWS_AS((DumbbellSpec{0.01, 0, 3, 0, 0.0}.validate()), std::domain_error);
  CHECK_THROWS_AS((DumbbellSpec{0.01, 1, 3, 2, 0.0}.validate()), std::domain_error);
  CHECK_THROWS_AS((DumbbellSpec{0.01, 1, 3, -1, 0.0}.validate()), std::domain_error);
  CHECK_THROWS_AS((DumbbellSpec{0.01, 1, 1, 0, 0.0}.validate()), std::domain_error);
  CHECK_NOTHROW((DumbbellSpec{0.05, 3, 4, 2, 1.0}.validate()));
  CHECK(DumbbellSpec{0.01, 1, 5, 2, 0.0}.fiber_dim() == 3);
  CHECK(DumbbellSpec{0.01, 1, 3, 0, 0.0}.log_scale() ==
        doctest::Approx(std::log(100.0)).epsilon(1e-15));
}

TEST_CASE("chain layout") {
  SUBCASE("total length matches the sum of the declared segment lengths") {
    const DumbbellSpec spec{0.01, 1, 3, 0, 0.0};
    const ChainProfile chain = build_chain(spec);
    const double expected = 1.5 * kPi + kPi / 6.0 + 2.0 * std::log(100.0);
    CHECK(chain.total_length() == doctest::Approx(expected).epsilon(1e-14));
  }
  SUBCASE("segment bookkeeping: 2 caps, k necks, k-1 bumps, 2k connectors") {
    for (int k = 1; k <= 5; ++k) {
      const ChainProfile chain = build_chain({0.01, k, 3, 0, 0.0});
      CHECK(static_cast<int>(chain.segments().size()) == 4 * k + 1);
      CHECK(static_cast<int>(chain.intervals(SegmentKind::Cap).size()) == 2);
      CHECK(static_cast<int>(chain.intervals(SegmentKind::Neck).size()) == k);
      CHECK(static_cast<int>(chain.intervals(SegmentKind::Bump).size()) == k - 1);
      CHECK(static_cast<int>(chain.intervals(SegmentKind::Connector).size()) == 2 * k);
      const double expected =
          1.5 * kPi + k * (2.0 * std::log(100.0) + kPi / 6.0) + (k - 1) * kPi / 2.0;
      CHECK(chain.total_length() == doctest::Approx(expected).epsilon(1e-13));
    }
    CHECK(static_cast<int>(build_chain({0.01, 3, 3, 0, 0.0}).segments().size()) == 13);
  }
}

TEST_CASE("gluing is numerically C^2 at every breakpoint") {
  for (double eps : {0.05, 0.01, 1e-4}) {
    for (int k : {1, 2, 3}) {
      const ChainProfile chain = build_chain({eps, k, 3, 0, 0.0});
      const auto segments = chain.segments();
      for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
        const Jet2 left = segments[i].eval(segments[i].length);
        const Jet2 right = segments[i + 1].eval(0.0);
        CHECK(std::abs(left.f - right.f) < 1e-12 * std::max(1.0, std::abs(left.f)));
        CHECK(std::abs(left.d1 - right.d1) < 1e-8);
        CHECK(std::abs(left.d2 - right.d2) < 1e-8);
      }
    }
  }
}

TEST_CASE("profile evaluation") {
  const double eps = 0.01;
  const ChainProfile chain = build_chain({eps, 1, 3, 0, 0.0});
  const double total = chain.total_length();

  SUBCASE("pole closure at both ends") {
    const Jet2 start = chain.eval(0.0);
    CHECK(start.f == 0.0);
    CHECK(start.d1 == 1.0);
    const Jet2 end = chain.eval(total);
    CHECK(std::abs(end.f) < 1e-14);
    CHECK(end.d1 == doctest::Approx(-1.0).epsilon(1e-14));
  }
  SUBCASE("neck midpoint attains the radius eps") {
    const auto neck = chain.intervals(SegmentKind::Neck).front();
    const double mid = 0.5 * (neck.first + neck.second);
    CHECK(chain.eval(mid).f == doctest::Approx(eps).epsilon(1e-14));
  }
  SUBCASE("arc-length bookkeeping against independently recomputed offsets") {
    const double neck_start = 3.0 * kPi / 4.0 + kPi / 12.0;  // cap + connector
    const double log_scale = -std::log(eps);
    for (double t : {total / 2.0, neck_start + 0.5 * log_scale, neck_start + 1.7 * log_scale}) {
      const double r = t - neck_start - log_scale;  // neck coordinate in [-L, L]
      CHECK(chain.eval(t).f == doctest::Approx(eps * std::cosh(r)).epsilon(1e-12));
    }
  }
  SUBCASE("domain error outside [0, T]") {
    CHECK_THROWS_AS(chain.eval(-0.5), std::domain_error);
    CHECK_THROWS_AS(chain.eval(total + 0.5), std::domain_error);
  }
  SUBCASE("positive in the interior") {
    for (int i = 1; i < 500; ++i) CHECK(chain.eval(total * i / 500.0).f > 0.0);
  }
}

TEST_CASE("single dumbbell is mirror symmetric") {
  const ChainProfile chain = build_chain({0.01, 1, 3, 0, 0.0});
  const double total = chain.total_length();
  for (int i = 0; i <= 1000; ++i) {
    const double t = total * i / 1000.0;
    CHECK(std::abs(chain.eval(t).f - chain.eval(total - t).f) < 1e-12);
  }
}

TEST_CASE("scaled profile stretches arc length and radius together") {
  const ChainProfile chain = build_chain({0.01, 2, 3, 0, 0.0});
  const ChainProfile stretched = chain.scaled(4.0);
  CHECK(stretched.total_length() == doctest::Approx(2.0 * chain.total_length()).epsilon(1e-15));
  for (double t : {0.1, 1.0, 5.0, chain.total_length() - 0.1}) {
    const Jet2 base = chain.eval(t);
    const Jet2 big = stretched.eval(2.0 * t);
    CHECK(big.f == doctest::Approx(2.0 * base.f).epsilon(1e-13));
    CHECK(big.d1 == doctest::Approx(base.d1).epsilon(1e-13));
    CHECK(big.d2 == doctest::Approx(base.d2 / 2.0).epsilon(1e-13));
  }
}

TEST_CASE("corrupted cutoffs fail loudly at construction") {
  const DumbbellSpec spec{0.01, 1, 3, 0, 0.0};
  // degenerate window
  CHECK_THROWS_AS(build_chain(spec, SmoothCutoff(kCutoffLower, kCutoffLower)),
                  std::invalid_argument);
  // window reaching past the connector end leaves a C^0 break at the cap
  CHECK_THROWS_AS(build_chain(spec, SmoothCutoff(kCutoffLower, kPi / 10.0)), NumericalError);
}
