#pragma once

#include <stdexcept>
#include <string>

namespace dumbbell {

// Raised when a numerical procedure cannot meet its contract: quadrature
// that fails to converge, eigenvalue brackets that cannot be established,
// or a profile that breaks its continuity bounds at construction time.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dumbbell
