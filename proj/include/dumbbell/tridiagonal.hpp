#pragma once

#include <Eigen/Core>

namespace dumbbell {

// Symmetric tridiagonal matrix stored as its two bands.
struct SymTridiagonal {
  Eigen::VectorXd diag;
  Eigen::VectorXd off;  // size diag.size() - 1

  Eigen::Index size() const { return diag.size(); }
};

Eigen::VectorXd tridiagonal_apply(const SymTridiagonal& matrix, const Eigen::VectorXd& x);

// x^T A x.
double quadratic_form(const SymTridiagonal& matrix, const Eigen::VectorXd& x);

// Number of generalized eigenvalues of (A, B) strictly below `shift`,
// counted from the pivot signs of the LDL^T recurrence on A - shift*B.
// Pivots smaller than pivot_floor in magnitude are replaced by -pivot_floor
// so the count stays finite near exact eigenvalues.
int eigenvalue_count_below(const SymTridiagonal& A, const SymTridiagonal& B, double shift,
                           double pivot_floor);

// The `count` smallest eigenvalues of A x = lambda B x with B positive
// definite, each isolated by inertia bisection and bracketed to relative
// width rel_tol. Ascending order. Throws NumericalError when no bracket
// can be established (indefinite B).
Eigen::VectorXd lowest_eigenvalues(const SymTridiagonal& A, const SymTridiagonal& B, int count,
                                   double rel_tol = 1e-12);

// Eigenvector of the pencil for an isolated eigenvalue, by shifted inverse
// iteration with a partially pivoted tridiagonal LU. Normalized in the
// B-norm with a deterministic sign.
Eigen::VectorXd pencil_eigenvector(const SymTridiagonal& A, const SymTridiagonal& B,
                                   double lambda);

}  // namespace dumbbell
