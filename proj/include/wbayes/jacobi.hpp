#pragma once

#include <Eigen/Dense>

namespace wbayes {

struct SymmetricEigen {
  Eigen::VectorXd values;   // descending
  Eigen::MatrixXd vectors;  // column j pairs with values(j)
  int sweeps = 0;
};

/**
 * Cyclic Jacobi eigensolver for a real symmetric matrix.
 *
 * Sweeps the strict upper triangle in row order and stops once the
 * off-diagonal Frobenius norm drops below `relative_tolerance * ||A||_F`.
 * Eigenpairs are sorted by decreasing eigenvalue; equal eigenvalues keep the
 * order of their diagonal position. Throws std::runtime_error if
 * `max_sweeps` is exhausted.
 */
SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& matrix, double relative_tolerance = 1e-12,
                            int max_sweeps = 100);

}  // namespace wbayes
