#pragma once

namespace dumbbell {

// Value of a scalar function of one variable together with its first two
// derivatives.
struct Jet2 {
  double f = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

}  // namespace dumbbell
