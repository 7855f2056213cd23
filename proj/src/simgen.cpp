#include "wbayes/simgen.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wbayes {

namespace {

struct LogMoments {
  double m1;  // lambda-mean of ln t on [a, b]
  double m2;  // lambda-mean of ln^2 t on [a, b]
};

LogMoments log_moments(double a, double b) {
  // antiderivatives: t ln t - t  and  t ln^2 t - 2 t ln t + 2 t
  auto f1 = [](double t) { return t * std::log(t) - t; };
  auto f2 = [](double t) {
    const double l = std::log(t);
    return t * l * l - 2.0 * t * l + 2.0 * t;
  };
  return {(f1(b) - f1(a)) / (b - a), (f2(b) - f2(a)) / (b - a)};
}

}  // namespace

void LogNormalParams::validate() const {
  if (!std::isfinite(mu) || !std::isfinite(sigma) || !(sigma > 0.0)) {
    throw std::invalid_argument("log-normal needs finite mu and sigma > 0");
  }
  if (!(a > 0.0) || !(b > a) || !std::isfinite(b)) {
    throw std::invalid_argument("log-normal truncation domain must satisfy 0 < a < b");
  }
}

Density lognormal_density(const LogNormalParams& params, const Grid& grid) {
  params.validate();
  if (grid.lower() <= 0.0) throw std::invalid_argument("log-normal density needs a grid on t > 0");
  const auto t = grid.nodes();
  std::vector<double> logs(t.size());
  const double two_var = 2.0 * params.sigma * params.sigma;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double l = std::log(t[k]);
    logs[k] = -l - (l - params.mu) * (l - params.mu) / two_var;
  }
  return normalized_from_log(reference_lebesgue(grid), std::move(logs));
}

double lognormal_clr(const LogNormalParams& params, double t) {
  const auto mom = log_moments(params.a, params.b);
  const double var = params.sigma * params.sigma;
  const double l = std::log(t);
  return -(l * l - mom.m2) / (2.0 * var) + (params.mu / var - 1.0) * (l - mom.m1);
}

std::vector<double> lognormal_clr(const LogNormalParams& params, const Grid& grid) {
  params.validate();
  std::vector<double> out(grid.size());
  const auto t = grid.nodes();
  for (std::size_t k = 0; k < t.size(); ++k) out[k] = lognormal_clr(params, t[k]);
  return out;
}

LogNormalParams design_lognormal_params(int kappa) {
  if (kappa < 1 || kappa > 81) throw std::invalid_argument("kappa must lie in 1..81");
  const int i = (kappa - 1) / 9 + 1;
  const int j = (kappa - 1) % 9 + 1;
  return {0.6 + 0.25 * (i - 1), 0.5 + 0.07 * (j - 1), 1.0, 10.0};
}

LogNormalSample design_lognormal_sample(const Grid& grid) {
  if (grid.lower() != 1.0 || grid.upper() != 10.0) {
    throw std::invalid_argument("the log-normal design lives on [1, 10]");
  }
  LogNormalSample out;
  for (int kappa = 1; kappa <= 81; ++kappa) {
    const auto p = design_lognormal_params(kappa);
    out.ids.push_back(std::to_string(kappa));
    out.densities.push_back(lognormal_density(p, grid));
    out.params.push_back(p);
    out.mu_index.push_back((kappa - 1) / 9 + 1);
    out.sigma_index.push_back((kappa - 1) % 9 + 1);
  }
  return out;
}

std::vector<double> sample_truncated_lognormal(const LogNormalParams& params, std::size_t count,
                                               std::mt19937_64& rng) {
  params.validate();
  std::lognormal_distribution<double> dist(params.mu, params.sigma);
  std::vector<double> out;
  out.reserve(count);
  std::size_t attempts = 0;
  const std::size_t max_attempts = 1000 * count + 1000;
  while (out.size() < count) {
    if (++attempts > max_attempts) {
      throw std::runtime_error("truncated log-normal: acceptance rate too low");
    }
    const double x = dist(rng);
    if (x >= params.a && x <= params.b) out.push_back(x);
  }
  return out;
}

}  // namespace wbayes
