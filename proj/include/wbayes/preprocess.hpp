#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wbayes/clr.hpp"
#include "wbayes/grid.hpp"
#include "wbayes/measure.hpp"

namespace wbayes {

struct Histogram {
  std::string label;
  std::vector<double> edges;   // m + 1 strictly increasing
  std::vector<double> counts;  // m non-negative, positive sum

  std::size_t classes() const { return counts.size(); }
  void validate() const;
};

/// ceil(log2(n_obs)) + 1 equidistant classes on [lo, hi]; returns the edges.
std::vector<double> sturges_classes(std::size_t n_obs, double lo, double hi);

/// Counts observations per class; values outside [edges.front(), edges.back()] are dropped.
Histogram bin_observations(std::span<const double> observations, std::vector<double> edges,
                           std::string label);

struct DclrPoints {
  std::vector<double> midpoints;
  std::vector<double> values;
};

/// Discrete clr of class proportions at the class midpoints. Zero counts are a
/// DataError unless `impute` adds a pseudo-count of 0.5 to every class.
DclrPoints histogram_to_dclr(const Histogram& histogram, bool impute = false);

struct SmoothingOptions {
  std::vector<double> interior_knots;
  double penalty = 1e-6;
};

/// Interior knots at the relative positions 30/117.22 and 70/117.22 of [a, b].
std::vector<double> default_interior_knots(double a, double b);
/// Keeps the knots strictly inside (a, b); the endpoints may be listed and are dropped.
std::vector<double> interior_knots_from_list(std::span<const double> knots, double a, double b);

/**
 * Penalized cubic smoothing spline of discrete clr values with a hard
 * zero-integral constraint on the analysis grid.
 *
 * Minimizes sum_j (s(x_j) - y_j)^2 + penalty * integral of s''^2 subject to
 * the grid quadrature of s being zero, via the KKT system with one Lagrange
 * multiplier. Throws DataError when the system is singular.
 */
ClrFunction smooth_dclr(const DclrPoints& points, const Grid& grid, const SmoothingOptions& options);

/// Histogram -> discrete clr -> smoothed clr -> canonical lambda-density.
Density smooth_histogram(const Histogram& histogram, const Grid& grid, const SmoothingOptions& options,
                         bool impute = false);

}  // namespace wbayes
