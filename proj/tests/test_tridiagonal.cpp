#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "dumbbell/tridiagonal.hpp"

using namespace dumbbell;

namespace {

SymTridiagonal identity(Eigen::Index n) {
  return {Eigen::VectorXd::Ones(n), Eigen::VectorXd::Zero(n - 1)};
}

Eigen::MatrixXd dense_of(const SymTridiagonal& matrix) {
  const Eigen::Index n = matrix.size();
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
  dense.diagonal() = matrix.diag;
  for (Eigen::Index i = 0; i + 1 < n; ++i) dense(i, i + 1) = dense(i + 1, i) = matrix.off[i];
  return dense;
}

// deterministic, diagonally varied test pencil
void fill_test_pencil(Eigen::Index n, SymTridiagonal& A, SymTridiagonal& B) {
  A.diag.resize(n);
  A.off.resize(n - 1);
  B.diag.resize(n);
  B.off.resize(n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    A.diag[i] = 2.0 + std::sin(0.7 * double(i));
    B.diag[i] = 1.5 + 0.5 * std::cos(0.3 * double(i));
  }
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    A.off[i] = -0.9 + 0.2 * std::sin(1.3 * double(i));
    B.off[i] = 0.1 * std::cos(0.9 * double(i));
  }
}

}  // namespace

TEST_CASE("apply and quadratic form") {
  SymTridiagonal A{Eigen::Vector3d(1.0, 2.0, 3.0), Eigen::Vector2d(-1.0, 0.5)};
  const Eigen::Vector3d x(1.0, 1.0, 1.0);
  const Eigen::VectorXd y = tridiagonal_apply(A, x);
  CHECK(y[0] == doctest::Approx(0.0));
  CHECK(y[1] == doctest::Approx(1.5));
  CHECK(y[2] == doctest::Approx(3.5));
  CHECK(quadratic_form(A, x) == doctest::Approx(5.0));
}

TEST_CASE("eigenvalue counts step across the spectrum") {
  // eigenvalues of tridiag(-1, 2, -1) at n = 3: 2 - sqrt(2), 2, 2 + sqrt(2)
  SymTridiagonal A{Eigen::Vector3d::Constant(2.0), Eigen::Vector2d::Constant(-1.0)};
  const SymTridiagonal B = identity(3);
  const double floor = 1e-300;
  CHECK(eigenvalue_count_below(A, B, 0.0, floor) == 0);
  CHECK(eigenvalue_count_below(A, B, 1.0, floor) == 1);
  CHECK(eigenvalue_count_below(A, B, 2.5, floor) == 2);
  CHECK(eigenvalue_count_below(A, B, 4.0, floor) == 3);
}

TEST_CASE("lowest eigenvalues of small closed-form problems") {
  SUBCASE("standard tridiagonal") {
    SymTridiagonal A{Eigen::Vector3d::Constant(2.0), Eigen::Vector2d::Constant(-1.0)};
    const Eigen::VectorXd values = lowest_eigenvalues(A, identity(3), 3);
    CHECK(values[0] == doctest::Approx(2.0 - std::numbers::sqrt2).epsilon(1e-12));
    CHECK(values[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(values[2] == doctest::Approx(2.0 + std::numbers::sqrt2).epsilon(1e-12));
  }
  SUBCASE("diagonal pencil") {
    SymTridiagonal A{Eigen::Vector2d(1.0, 2.0), Eigen::VectorXd::Zero(1)};
    SymTridiagonal B{Eigen::Vector2d(2.0, 1.0), Eigen::VectorXd::Zero(1)};
    const Eigen::VectorXd values = lowest_eigenvalues(A, B, 2);
    CHECK(values[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(values[1] == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("bisection agrees with a dense generalized eigensolver") {
  SymTridiagonal A, B;
  fill_test_pencil(60, A, B);
  const Eigen::VectorXd values = lowest_eigenvalues(A, B, 6);

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> dense(dense_of(A), dense_of(B));
  REQUIRE(dense.info() == Eigen::Success);
  for (int j = 0; j < 6; ++j) {
    const double scale = std::max(std::abs(dense.eigenvalues()[j]), 1e-12);
    CHECK(std::abs(values[j] - dense.eigenvalues()[j]) / scale < 1e-10);
  }
}

TEST_CASE("count argument is validated") {
  SymTridiagonal A, B;
  fill_test_pencil(8, A, B);
  CHECK_THROWS_AS(lowest_eigenvalues(A, B, 0), std::domain_error);
  CHECK_THROWS_AS(lowest_eigenvalues(A, B, 9), std::domain_error);
}

TEST_CASE("inverse iteration recovers an eigenvector") {
  SymTridiagonal A, B;
  fill_test_pencil(40, A, B);
  const Eigen::VectorXd values = lowest_eigenvalues(A, B, 3);
  for (int j = 0; j < 3; ++j) {
    const Eigen::VectorXd v = pencil_eigenvector(A, B, values[j]);
    const Eigen::VectorXd residual =
        tridiagonal_apply(A, v) - values[j] * tridiagonal_apply(B, v);
    CHECK(residual.norm() < 1e-9 * tridiagonal_apply(A, v).norm());
    CHECK(quadratic_form(B, v) == doctest::Approx(1.0).epsilon(1e-10));
  }
}
