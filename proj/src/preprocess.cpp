#include "wbayes/preprocess.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "wbayes/bspline.hpp"
#include "wbayes/errors.hpp"

namespace wbayes {

void Histogram::validate() const {
  if (edges.size() != counts.size() + 1 || counts.empty()) {
    throw DataError("histogram '" + label + "' needs m counts and m+1 edges");
  }
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!std::isfinite(edges[i]) || !(edges[i + 1] > edges[i])) {
      throw DataError("histogram '" + label + "' edges must be strictly increasing");
    }
  }
  double sum = 0.0;
  for (double c : counts) {
    if (!std::isfinite(c) || c < 0.0) throw DataError("histogram '" + label + "' has a negative count");
    sum += c;
  }
  if (!(sum > 0.0)) throw DataError("histogram '" + label + "' is empty");
}

std::vector<double> sturges_classes(std::size_t n_obs, double lo, double hi) {
  if (n_obs < 1) throw std::invalid_argument("Sturges rule needs at least one observation");
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
    throw std::invalid_argument("Sturges rule needs a finite range with hi > lo");
  }
  // ceil(log2(n)) == bit_width(n - 1) for n >= 1
  const std::size_t m = static_cast<std::size_t>(std::bit_width(n_obs - 1)) + 1;
  std::vector<double> edges(m + 1);
  for (std::size_t i = 0; i <= m; ++i) edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(m);
  edges.back() = hi;
  return edges;
}

Histogram bin_observations(std::span<const double> observations, std::vector<double> edges,
                           std::string label) {
  if (edges.size() < 2) throw std::invalid_argument("binning needs at least one class");
  Histogram h{std::move(label), std::move(edges), {}};
  h.counts.assign(h.edges.size() - 1, 0.0);
  for (double x : observations) {
    if (!(x >= h.edges.front()) || !(x <= h.edges.back())) continue;
    auto it = std::upper_bound(h.edges.begin(), h.edges.end(), x);
    auto cls = static_cast<std::size_t>(std::distance(h.edges.begin(), it)) - 1;
    cls = std::min(cls, h.counts.size() - 1);
    h.counts[cls] += 1.0;
  }
  return h;
}

DclrPoints histogram_to_dclr(const Histogram& histogram, bool impute) {
  histogram.validate();
  const std::size_t m = histogram.classes();
  std::vector<double> counts = histogram.counts;
  const bool has_zero = std::any_of(counts.begin(), counts.end(), [](double c) { return c == 0.0; });
  if (has_zero) {
    if (!impute) {
      throw DataError("histogram '" + histogram.label + "' has empty classes (enable imputation to proceed)");
    }
    for (auto& c : counts) c += 0.5;
  }
  double total = 0.0;
  for (double c : counts) total += c;
  DclrPoints out;
  out.midpoints.resize(m);
  out.values.resize(m);
  double mean_log = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    out.midpoints[j] = 0.5 * (histogram.edges[j] + histogram.edges[j + 1]);
    out.values[j] = std::log(counts[j] / total);
    mean_log += out.values[j];
  }
  mean_log /= static_cast<double>(m);
  for (auto& v : out.values) v -= mean_log;
  return out;
}

std::vector<double> default_interior_knots(double a, double b) {
  const double span = b - a;
  return {a + span * (30.0 / 117.22), a + span * (70.0 / 117.22)};
}

std::vector<double> interior_knots_from_list(std::span<const double> knots, double a, double b) {
  std::vector<double> out;
  for (double k : knots) {
    if (!std::isfinite(k) || k < a || k > b) {
      throw std::invalid_argument("knot " + std::to_string(k) + " lies outside the domain");
    }
    if (k > a && k < b) out.push_back(k);
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (!(out[i] > out[i - 1])) throw std::invalid_argument("knots must be strictly increasing");
  }
  return out;
}

ClrFunction smooth_dclr(const DclrPoints& points, const Grid& grid, const SmoothingOptions& options) {
  const std::size_t m = points.midpoints.size();
  if (m != points.values.size()) throw std::invalid_argument("smoothing: midpoints and values differ in length");
  if (m < 3) throw std::invalid_argument("smoothing needs at least three points");
  if (!std::isfinite(options.penalty) || options.penalty < 0.0) {
    throw std::invalid_argument("smoothing penalty must be finite and non-negative");
  }
  const CubicBSplineBasis basis(grid.lower(), grid.upper(), options.interior_knots);
  const auto nb = static_cast<Eigen::Index>(basis.size());

  Eigen::MatrixXd design(static_cast<Eigen::Index>(m), nb);
  Eigen::VectorXd y(static_cast<Eigen::Index>(m));
  for (std::size_t j = 0; j < m; ++j) {
    const double x = points.midpoints[j];
    if (!(x >= grid.lower() && x <= grid.upper()) || !std::isfinite(points.values[j])) {
      throw std::invalid_argument("smoothing: data point outside the domain or non-finite");
    }
    const auto b = basis.evaluate(x);
    for (Eigen::Index i = 0; i < nb; ++i) design(static_cast<Eigen::Index>(j), i) = b[static_cast<std::size_t>(i)];
    y(static_cast<Eigen::Index>(j)) = points.values[j];
  }

  // basis sampled on the analysis grid; the constraint uses the same quadrature
  const auto t = grid.nodes();
  const auto w = grid.weights();
  Eigen::MatrixXd on_grid(static_cast<Eigen::Index>(t.size()), nb);
  Eigen::VectorXd constraint = Eigen::VectorXd::Zero(nb);
  for (std::size_t k = 0; k < t.size(); ++k) {
    const auto b = basis.evaluate(t[k]);
    for (Eigen::Index i = 0; i < nb; ++i) {
      on_grid(static_cast<Eigen::Index>(k), i) = b[static_cast<std::size_t>(i)];
      constraint(i) += w[k] * b[static_cast<std::size_t>(i)];
    }
  }

  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(nb + 1, nb + 1);
  kkt.topLeftCorner(nb, nb) = design.transpose() * design + options.penalty * basis.roughness();
  kkt.block(0, nb, nb, 1) = constraint;
  kkt.block(nb, 0, 1, nb) = constraint.transpose();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nb + 1);
  rhs.head(nb) = design.transpose() * y;

  Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
  lu.setThreshold(1e-12);
  if (lu.rank() < nb + 1) {
    throw DataError("smoothing system is singular (too few points for the knot sequence?)");
  }
  const Eigen::VectorXd sol = lu.solve(rhs);
  const Eigen::VectorXd curve = on_grid * sol.head(nb);

  std::vector<double> values(curve.data(), curve.data() + curve.size());
  return ClrFunction(ClrSpace::l2_0_lambda, reference_lebesgue(grid), std::move(values));
}

Density smooth_histogram(const Histogram& histogram, const Grid& grid, const SmoothingOptions& options,
                         bool impute) {
  const auto smoothed = smooth_dclr(histogram_to_dclr(histogram, impute), grid, options);
  return clr_sqrt_p_inverse(smoothed);
}

}  // namespace wbayes
