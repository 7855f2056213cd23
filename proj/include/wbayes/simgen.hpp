#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "wbayes/grid.hpp"
#include "wbayes/measure.hpp"

namespace wbayes {

struct LogNormalParams {
  double mu = 0.0;
  double sigma = 1.0;
  double a = 1.0;  // truncation domain [a, b], a > 0
  double b = 10.0;

  void validate() const;
};

/// Truncated log-normal lambda-density, kernel (1/t) exp(-(ln t - mu)^2 / (2 sigma^2)),
/// as the canonical representative (lambda-integral equals b - a).
Density lognormal_density(const LogNormalParams& params, const Grid& grid);

/// Closed-form clr w.r.t. lambda on [a, b]:
///   -(ln^2 t - M2) / (2 sigma^2) + (mu / sigma^2 - 1) (ln t - M1),
/// where M1, M2 are the lambda-means of ln t and ln^2 t over [a, b].
double lognormal_clr(const LogNormalParams& params, double t);
std::vector<double> lognormal_clr(const LogNormalParams& params, const Grid& grid);

/// Design grid mu_i = 0.6 + 0.25 (i-1), sigma_j = 0.5 + 0.07 (j-1), i, j = 1..9,
/// indexed by kappa = j + 9 (i-1) in 1..81.
LogNormalParams design_lognormal_params(int kappa);

struct LogNormalSample {
  std::vector<std::string> ids;  // "1".."81"
  std::vector<Density> densities;
  std::vector<LogNormalParams> params;
  std::vector<int> mu_index;     // i in 1..9
  std::vector<int> sigma_index;  // j in 1..9
};

/// The 81-density design on a grid over [1, 10], in kappa order.
LogNormalSample design_lognormal_sample(const Grid& grid);

/// Draws from the log-normal truncated to [a, b] by rejection.
std::vector<double> sample_truncated_lognormal(const LogNormalParams& params, std::size_t count,
                                               std::mt19937_64& rng);

}  // namespace wbayes
