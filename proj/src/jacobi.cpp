#include "wbayes/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace wbayes {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

}  // namespace

SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& matrix, double relative_tolerance, int max_sweeps) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("jacobi: matrix must be square");
  if (!matrix.allFinite()) throw std::invalid_argument("jacobi: matrix has non-finite entries");
  const Eigen::Index n = matrix.rows();
  // symmetrize so round-off asymmetry in the input cannot bias the rotations
  Eigen::MatrixXd a = 0.5 * (matrix + matrix.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

  const double threshold = relative_tolerance * a.norm();
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweep == max_sweeps) throw std::runtime_error("jacobi: no convergence");
    ++sweep;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.values(j) = a(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(j)]);
    out.vectors.col(j) = v.col(order[static_cast<std::size_t>(j)]);
  }
  out.sweeps = sweep;
  return out;
}

}  // namespace wbayes
