#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "wbayes/grid.hpp"
#include "wbayes/measure.hpp"

namespace wbayes::testing {

/// Smooth random log-density: a few low-frequency cosines with random amplitudes.
inline std::vector<double> random_log_curve(const Grid& grid, std::mt19937_64& rng, double amplitude = 1.0) {
  std::normal_distribution<double> z(0.0, amplitude);
  const int terms = 5;
  std::vector<double> c(terms);
  for (auto& x : c) x = z(rng);
  std::vector<double> out(grid.size());
  const auto t = grid.nodes();
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double u = (t[k] - grid.lower()) / grid.length();
    double s = 0.0;
    for (int j = 0; j < terms; ++j) s += c[static_cast<std::size_t>(j)] * std::cos(M_PI * (j + 1) * u) / (j + 1);
    out[k] = s;
  }
  return out;
}

inline Density random_density(const ReferenceMeasure& ref, std::mt19937_64& rng, double amplitude = 1.0) {
  return normalized_from_log(ref, random_log_curve(ref.grid(), rng, amplitude));
}

inline std::vector<Density> random_lambda_sample(const Grid& grid, std::size_t n, std::mt19937_64& rng) {
  std::vector<Density> out;
  const auto lambda = reference_lebesgue(grid);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_density(lambda, rng));
  return out;
}

/// lambda, lambda/|Omega|, three exponential references and the sample-mean reference.
inline std::vector<ReferenceMeasure> reference_family(const Grid& grid, std::span<const Density> lambda_sample) {
  return {reference_lebesgue(grid),         reference_uniform_unit(grid),
          reference_exponential(grid, 0.25), reference_exponential(grid, 0.75),
          reference_exponential(grid, 1.25), reference_from_mean(lambda_sample)};
}

/// O(n^2) quadrature of (1/(2 P(Omega))) int int ln(f(t)/f(u)) ln(g(t)/g(u)) dP(t) dP(u).
inline double double_integral_inner(const Density& f, const Density& g) {
  const auto& ref = f.reference();
  const auto w = ref.grid().weights();
  const auto p = ref.density();
  const auto lf = f.log_values();
  const auto lg = g.log_values();
  double total = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) total += w[k] * p[k];
  double acc = 0.0;
  for (std::size_t t = 0; t < w.size(); ++t) {
    double row = 0.0;
    for (std::size_t u = 0; u < w.size(); ++u) row += w[u] * p[u] * (lf[t] - lf[u]) * (lg[t] - lg[u]);
    acc += w[t] * p[t] * row;
  }
  return acc / (2.0 * total);
}

inline std::vector<double> ranks(const std::vector<double>& x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && x[idx[j + 1]] == x[idx[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
    i = j + 1;
  }
  return r;
}

/// Pearson correlation of the (tie-averaged) ranks.
inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace wbayes::testing
