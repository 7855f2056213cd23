#include "wbayes/sfpca.hpp"

#include <cmath>
#include <stdexcept>

#include "wbayes/bayes_ops.hpp"
#include "wbayes/errors.hpp"
#include "wbayes/jacobi.hpp"
#include "wbayes/kernels.hpp"

namespace wbayes {

namespace {

constexpr double kDegenerateGap = 1e-10;
constexpr double kInvariantTolerance = 1e-8;
constexpr double kNoVariability = 1e-24;

// first non-zero node value must be non-negative
bool needs_flip(std::span<const double> v) {
  for (double x : v) {
    if (x != 0.0) return x < 0.0;
  }
  return false;
}

void check_invariants(const Grid& grid, const FpcaResult& r, double trace) {
  for (std::size_t i = 0; i < r.components(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double ip = grid.inner(r.directions_clr[i].values(), r.directions_clr[j].values());
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(ip - expected) > kInvariantTolerance) {
        throw std::logic_error("wsfpca: principal directions are not orthonormal");
      }
    }
  }
  double sum = 0.0;
  for (double rho : r.eigenvalues) sum += rho;
  if (std::abs(sum - trace) > kInvariantTolerance * std::max(trace, 1e-300)) {
    throw std::logic_error("wsfpca: eigenvalues do not add up to the total variance");
  }
}

}  // namespace

FpcaResult wsfpca(std::span<const Density> sample, std::size_t k) {
  const std::size_t n_obs = sample.size();
  if (n_obs < 2) throw DataError("wsfpca needs at least two densities");
  if (k < 1 || k > n_obs - 1) {
    throw std::invalid_argument("number of components must lie in [1, N-1]");
  }
  for (const auto& f : sample) {
    require_same_grid(sample.front().grid(), f.grid());
    require_same_reference(sample.front().reference(), f.reference());
    for (double v : f.log_values()) {
      if (!std::isfinite(v)) throw DataError("wsfpca: non-finite density values");
    }
  }
  const ReferenceMeasure& ref = sample.front().reference();
  const Grid& grid = ref.grid();
  const std::size_t n_grid = grid.size();

  Density mean = sample_mean(sample);
  const auto centred = center(sample);
  const auto clr_rows = clr_u_batch(centred);

  kernels::RowMatrix y(static_cast<Eigen::Index>(n_obs), static_cast<Eigen::Index>(n_grid));
  for (std::size_t i = 0; i < n_obs; ++i) {
    const auto v = clr_rows[i].values();
    for (std::size_t t = 0; t < n_grid; ++t) y(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(t)) = v[t];
  }
  const auto w = grid.weights();
  const Eigen::MatrixXd gram = kernels::gram(y, w, 1.0 / static_cast<double>(n_obs));
  const double trace = gram.trace();
  // spread left by rounding alone when every density is B-equivalent to the mean
  const auto mean_clr = clr_u(mean);
  const double second_moment = trace + grid.inner(mean_clr.values(), mean_clr.values());
  if (!(trace > kNoVariability * second_moment)) throw DataError("wsfpca: the sample has no variability");

  const SymmetricEigen eig = jacobi_eigen(gram);

  std::vector<double> rho(n_obs - 1);
  double rho_sum = 0.0;
  for (std::size_t j = 0; j < n_obs - 1; ++j) {
    rho[j] = std::max(0.0, eig.values(static_cast<Eigen::Index>(j)));
    rho_sum += rho[j];
  }

  const auto sqrt_p = ref.sqrt_density();
  std::vector<std::vector<double>> dirs;
  dirs.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<double> e(n_grid, 0.0);
    for (std::size_t i = 0; i < n_obs; ++i) {
      const double c = eig.vectors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      const double* row = y.row(static_cast<Eigen::Index>(i)).data();
      for (std::size_t t = 0; t < n_grid; ++t) e[t] += c * row[t];
    }
    // two Gram-Schmidt passes keep near-null directions orthogonal to the rest
    // and to sqrt(p), i.e. inside the zero-integral subspace
    for (int pass = 0; pass < 2; ++pass) {
      const double off = grid.inner(e, sqrt_p) / ref.total();
      for (std::size_t t = 0; t < n_grid; ++t) e[t] -= off * sqrt_p[t];
      for (const auto& prev : dirs) {
        const double proj = grid.inner(e, prev);
        for (std::size_t t = 0; t < n_grid; ++t) e[t] -= proj * prev[t];
      }
    }
    const double len = std::sqrt(grid.inner(e, e));
    if (!(len > 0.0) || !std::isfinite(len)) {
      throw DataError("wsfpca: component " + std::to_string(j + 1) + " has no support in the sample");
    }
    const double sign = needs_flip(e) ? -1.0 : 1.0;
    for (auto& x : e) x *= sign / len;
    dirs.push_back(std::move(e));
  }

  FpcaResult result{ref, std::move(mean), rho, {}, {}, Eigen::MatrixXd(n_obs, k), {}, {}, eig.sweeps};
  for (std::size_t j = 0; j < k; ++j) {
    result.directions_clr.emplace_back(ClrSpace::l2_0_sqrtp_lambda, ref, std::move(dirs[j]));
  }
  for (std::size_t i = 0; i < n_obs; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      result.scores(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          grid.inner(clr_rows[i].values(), result.directions_clr[j].values());
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    result.directions_density.push_back(clr_u_inverse(result.directions_clr[j]));
    result.explained_ratio.push_back(rho[j] / rho_sum);
    const bool tied_next = j + 1 < rho.size() && std::abs(rho[j] - rho[j + 1]) < kDegenerateGap * rho[0];
    const bool tied_prev = j > 0 && std::abs(rho[j - 1] - rho[j]) < kDegenerateGap * rho[0];
    result.degenerate.push_back(tied_next || tied_prev);
  }
  check_invariants(grid, result, trace);
  return result;
}

Density project(const FpcaResult& result, const Density& f, std::size_t k) {
  if (k > result.components()) throw std::invalid_argument("projection order exceeds computed components");
  require_same_reference(result.reference, f.reference());
  Density out = result.mean;
  if (k == 0) return out;
  const auto y = clr_u(subtract(f, result.mean));
  const Grid& grid = result.reference.grid();
  for (std::size_t j = 0; j < k; ++j) {
    const double score = grid.inner(y.values(), result.directions_clr[j].values());
    out = perturb(out, power(score, result.directions_density[j]));
  }
  return out;
}

std::pair<Density, Density> harmonic(const FpcaResult& result, std::size_t j, double multiple) {
  if (j < 1 || j > result.components()) throw std::invalid_argument("harmonic: component index out of range");
  const double step = multiple * std::sqrt(result.eigenvalues[j - 1]);
  const Density shift = power(step, result.directions_density[j - 1]);
  return {perturb(result.mean, shift), subtract(result.mean, shift)};
}

ScoreTable scores_table(const FpcaResult& result, std::vector<std::string> ids) {
  if (ids.size() != result.sample_size()) {
    throw std::invalid_argument("score table needs one id per observation");
  }
  ScoreTable table{std::move(ids), {}, result.scores};
  for (std::size_t j = 0; j < result.components(); ++j) table.components.push_back("pc" + std::to_string(j + 1));
  return table;
}

}  // namespace wbayes
