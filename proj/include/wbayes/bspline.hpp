#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace wbayes {

/// Clamped cubic B-spline basis on [a, b] with the given interior knots.
class CubicBSplineBasis {
 public:
  CubicBSplineBasis(double a, double b, std::vector<double> interior_knots);

  std::size_t size() const { return knots_.size() - 4; }
  double lower() const { return knots_.front(); }
  double upper() const { return knots_.back(); }
  std::span<const double> knots() const { return knots_; }

  /// All basis functions (or their derivatives, order <= 3) at x in [a, b].
  std::vector<double> evaluate(double x, int derivative = 0) const;
  /// Integral of each basis function over [a, b].
  std::vector<double> integrals() const;
  /// Roughness Gram matrix R_ij = integral of B_i'' B_j'' over [a, b].
  Eigen::MatrixXd roughness() const;

 private:
  std::vector<double> knots_;
};

}  // namespace wbayes
