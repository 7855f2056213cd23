#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

// Data-parallel inner loops. Every kernel has a serial reference version
// (kept for testing and benchmarking) and an OpenMP version; the unqualified
// entry points dispatch to the parallel one when OpenMP is compiled in.
// Each output entry is accumulated by a single thread in a fixed order, so
// serial and parallel results are bitwise identical.
namespace wbayes::kernels {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

namespace serial {
/// G_ij = scale * sum_k w_k Y_ik Y_jk
Eigen::MatrixXd gram(const RowMatrix& rows, std::span<const double> weights, double scale);
std::vector<double> column_mean(const RowMatrix& rows);
}  // namespace serial

namespace parallel {
Eigen::MatrixXd gram(const RowMatrix& rows, std::span<const double> weights, double scale);
std::vector<double> column_mean(const RowMatrix& rows);
}  // namespace parallel

Eigen::MatrixXd gram(const RowMatrix& rows, std::span<const double> weights, double scale);
std::vector<double> column_mean(const RowMatrix& rows);

bool parallel_enabled();
int max_threads();

}  // namespace wbayes::kernels
