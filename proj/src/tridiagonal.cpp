#include "dumbbell/tridiagonal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dumbbell/errors.hpp"

namespace dumbbell {

namespace {

void check_pair(const SymTridiagonal& A, const SymTridiagonal& B) {
  if (A.size() < 1 || A.off.size() != A.size() - 1)
    throw std::invalid_argument("tridiagonal: malformed band sizes");
  if (B.diag.size() != A.diag.size() || B.off.size() != A.off.size())
    throw std::invalid_argument("tridiagonal: pencil shape mismatch");
}

// LAPACK-style floor that keeps e^2/d away from overflow for the largest
// off-diagonal entry the bisection can produce.
double pivot_floor_for(const SymTridiagonal& A, const SymTridiagonal& B, double shift_max) {
  double off_max = 0.0;
  if (A.off.size() > 0)
    off_max = A.off.cwiseAbs().maxCoeff() + std::abs(shift_max) * B.off.cwiseAbs().maxCoeff();
  return std::numeric_limits<double>::min() * std::max(1.0, off_max * off_max);
}

// Tridiagonal LU with partial pivoting (dgttrf layout: multipliers in dl,
// the second superdiagonal filled by row swaps).
struct PivotedLU {
  Eigen::VectorXd dl, d, du, du2;
  std::vector<bool> swapped;

  PivotedLU(const SymTridiagonal& A, const SymTridiagonal& B, double shift) {
    const Eigen::Index n = A.size();
    d = A.diag - shift * B.diag;
    dl = A.off - shift * B.off;
    du = dl;
    du2 = Eigen::VectorXd::Zero(std::max<Eigen::Index>(0, n - 2));
    swapped.assign(static_cast<std::size_t>(std::max<Eigen::Index>(0, n - 1)), false);

    const double tiny = std::numeric_limits<double>::min();
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        if (std::abs(d[i]) < tiny) d[i] = tiny;
        const double factor = dl[i] / d[i];
        dl[i] = factor;
        d[i + 1] -= factor * du[i];
      } else {
        const double factor = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = factor;
        const double upper = du[i];
        du[i] = d[i + 1];
        d[i + 1] = upper - factor * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -factor * du[i + 1];
        }
        swapped[static_cast<std::size_t>(i)] = true;
      }
    }
    if (std::abs(d[n - 1]) < tiny) d[n - 1] = tiny;
  }

  Eigen::VectorXd solve(Eigen::VectorXd rhs) const {
    const Eigen::Index n = d.size();
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
      if (swapped[static_cast<std::size_t>(i)]) std::swap(rhs[i], rhs[i + 1]);
      rhs[i + 1] -= dl[i] * rhs[i];
    }
    rhs[n - 1] /= d[n - 1];
    if (n > 1) rhs[n - 2] = (rhs[n - 2] - du[n - 2] * rhs[n - 1]) / d[n - 2];
    for (Eigen::Index i = n - 3; i >= 0; --i)
      rhs[i] = (rhs[i] - du[i] * rhs[i + 1] - du2[i] * rhs[i + 2]) / d[i];
    return rhs;
  }
};

}  // namespace

Eigen::VectorXd tridiagonal_apply(const SymTridiagonal& matrix, const Eigen::VectorXd& x) {
  const Eigen::Index n = matrix.size();
  if (x.size() != n) throw std::invalid_argument("tridiagonal_apply: size mismatch");
  Eigen::VectorXd y = matrix.diag.cwiseProduct(x);
  if (n > 1) {
    y.head(n - 1) += matrix.off.cwiseProduct(x.tail(n - 1));
    y.tail(n - 1) += matrix.off.cwiseProduct(x.head(n - 1));
  }
  return y;
}

double quadratic_form(const SymTridiagonal& matrix, const Eigen::VectorXd& x) {
  return x.dot(tridiagonal_apply(matrix, x));
}

int eigenvalue_count_below(const SymTridiagonal& A, const SymTridiagonal& B, double shift,
                           double pivot_floor) {
  check_pair(A, B);
  const Eigen::Index n = A.size();
  int count = 0;
  double pivot = A.diag[0] - shift * B.diag[0];
  if (std::abs(pivot) < pivot_floor) pivot = -pivot_floor;
  if (pivot < 0.0) ++count;
  for (Eigen::Index i = 1; i < n; ++i) {
    const double e = A.off[i - 1] - shift * B.off[i - 1];
    pivot = (A.diag[i] - shift * B.diag[i]) - (e / pivot) * e;
    if (std::abs(pivot) < pivot_floor) pivot = -pivot_floor;
    if (pivot < 0.0) ++count;
  }
  return count;
}

Eigen::VectorXd lowest_eigenvalues(const SymTridiagonal& A, const SymTridiagonal& B, int count,
                                   double rel_tol) {
  check_pair(A, B);
  const Eigen::Index n = A.size();
  if (count < 1 || count > n)
    throw std::domain_error("lowest_eigenvalues: count must lie in [1, n]");

  double hi = 1.0;
  int guard = 0;
  while (eigenvalue_count_below(A, B, hi, pivot_floor_for(A, B, hi)) < count) {
    hi *= 8.0;
    if (++guard > 360)
      throw NumericalError("lowest_eigenvalues: no upper bracket below overflow");
  }
  double lo = -1e-8 * std::max(1.0, hi);
  guard = 0;
  while (eigenvalue_count_below(A, B, lo, pivot_floor_for(A, B, -lo)) > 0) {
    lo *= 8.0;
    if (++guard > 360)
      throw NumericalError("lowest_eigenvalues: no lower bracket; mass matrix indefinite?");
  }

  const double pivot_floor = pivot_floor_for(A, B, std::max(hi, -lo));
  Eigen::VectorXd values(count);
  for (int k = 0; k < count; ++k) {
    double a = lo;
    double b = hi;
    for (int iter = 0; iter < 1200; ++iter) {
      const double mid = 0.5 * (a + b);
      if (!(mid > a && mid < b)) break;
      if (eigenvalue_count_below(A, B, mid, pivot_floor) >= k + 1)
        b = mid;
      else
        a = mid;
      if (b - a <= rel_tol * std::max(std::abs(a), std::abs(b))) break;
    }
    values[k] = 0.5 * (a + b);
    if (k > 0 && values[k] < values[k - 1]) values[k] = values[k - 1];
  }
  return values;
}

Eigen::VectorXd pencil_eigenvector(const SymTridiagonal& A, const SymTridiagonal& B,
                                   double lambda) {
  check_pair(A, B);
  const Eigen::Index n = A.size();
  const double shift = lambda * (1.0 + 1e-11) + std::numeric_limits<double>::min();
  const PivotedLU lu(A, B, shift);

  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  x /= std::sqrt(quadratic_form(B, x));
  for (int iter = 0; iter < 4; ++iter) {
    Eigen::VectorXd y = lu.solve(tridiagonal_apply(B, x));
    const double norm = std::sqrt(quadratic_form(B, y));
    if (!(norm > 0.0) || !std::isfinite(norm))
      throw NumericalError("pencil_eigenvector: inverse iteration collapsed");
    x = y / norm;
  }

  Eigen::Index peak = 0;
  x.cwiseAbs().maxCoeff(&peak);
  if (x[peak] < 0.0) x = -x;
  return x;
}

}  // namespace dumbbell
