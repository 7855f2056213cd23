#include "wbayes/kernels.hpp"

#include <stdexcept>

#ifdef WBAYES_HAVE_OPENMP
#include <omp.h>
#endif

namespace wbayes::kernels {

namespace {

void check_weights(const RowMatrix& rows, std::span<const double> weights) {
  if (static_cast<Eigen::Index>(weights.size()) != rows.cols()) {
    throw std::invalid_argument("gram: weight length does not match row length");
  }
}

inline double weighted_row_dot(const RowMatrix& rows, std::span<const double> w, Eigen::Index i,
                               Eigen::Index j) {
  const double* a = rows.row(i).data();
  const double* b = rows.row(j).data();
  double sum = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) sum += w[k] * a[k] * b[k];
  return sum;
}

}  // namespace

namespace serial {

Eigen::MatrixXd gram(const RowMatrix& rows, std::span<const double> weights, double scale) {
  check_weights(rows, weights);
  const Eigen::Index n = rows.rows();
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double v = scale * weighted_row_dot(rows, weights, i, j);
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

std::vector<double> column_mean(const RowMatrix& rows) {
  const Eigen::Index n = rows.rows();
  const Eigen::Index m = rows.cols();
  std::vector<double> mean(static_cast<std::size_t>(m), 0.0);
  if (n == 0) return mean;
  for (Eigen::Index k = 0; k < m; ++k) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) sum += rows(i, k);
    mean[static_cast<std::size_t>(k)] = sum / static_cast<double>(n);
  }
  return mean;
}

}  // namespace serial

namespace parallel {

Eigen::MatrixXd gram(const RowMatrix& rows, std::span<const double> weights, double scale) {
  check_weights(rows, weights);
  const Eigen::Index n = rows.rows();
  Eigen::MatrixXd g(n, n);
  // upper-triangle pairs flattened so the work is balanced across threads
  const long pairs = static_cast<long>(n * (n + 1) / 2);
#pragma omp parallel for schedule(static)
  for (long p = 0; p < pairs; ++p) {
    Eigen::Index i = 0;
    long rem = p;
    while (rem >= static_cast<long>(n - i)) {
      rem -= static_cast<long>(n - i);
      ++i;
    }
    const Eigen::Index j = i + static_cast<Eigen::Index>(rem);
    const double v = scale * weighted_row_dot(rows, weights, i, j);
    g(i, j) = v;
    g(j, i) = v;
  }
  return g;
}

std::vector<double> column_mean(const RowMatrix& rows) {
  const Eigen::Index n = rows.rows();
  const long m = static_cast<long>(rows.cols());
  std::vector<double> mean(static_cast<std::size_t>(m), 0.0);
  if (n == 0) return mean;
#pragma omp parallel for schedule(static)
  for (long k = 0; k < m; ++k) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) sum += rows(i, k);
    mean[static_cast<std::size_t>(k)] = sum / static_cast<double>(n);
  }
  return mean;
}

}  // namespace parallel

Eigen::MatrixXd gram(const RowMatrix& rows, std::span<const double> weights, double scale) {
#ifdef WBAYES_HAVE_OPENMP
  return parallel::gram(rows, weights, scale);
#else
  return serial::gram(rows, weights, scale);
#endif
}

std::vector<double> column_mean(const RowMatrix& rows) {
#ifdef WBAYES_HAVE_OPENMP
  return parallel::column_mean(rows);
#else
  return serial::column_mean(rows);
#endif
}

bool parallel_enabled() {
#ifdef WBAYES_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef WBAYES_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace wbayes::kernels
