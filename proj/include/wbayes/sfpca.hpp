#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "wbayes/clr.hpp"
#include "wbayes/measure.hpp"

namespace wbayes {

/**
 * Weighted simplicial functional PCA of a sample in B^2(P).
 *
 * eigenvalues holds all N-1 variances rho_1 >= ... >= rho_{N-1} >= 0; the
 * remaining members describe the first K components only.
 */
struct FpcaResult {
  ReferenceMeasure reference;
  Density mean;
  std::vector<double> eigenvalues;
  std::vector<ClrFunction> directions_clr;  // clr_u(xi_j), orthonormal in L2(lambda)
  std::vector<Density> directions_density;  // xi_j in B^2(P)
  Eigen::MatrixXd scores;                   // N x K
  std::vector<double> explained_ratio;      // rho_j / sum(rho), K entries
  std::vector<bool> degenerate;             // rho_j numerically tied with rho_{j+1}
  int jacobi_sweeps = 0;

  std::size_t components() const { return directions_clr.size(); }
  std::size_t sample_size() const { return static_cast<std::size_t>(scores.rows()); }
};

/// Requires N >= 2 densities sharing grid and reference, 1 <= k <= N-1.
FpcaResult wsfpca(std::span<const Density> sample, std::size_t k);

/// mean (+) sum_{j<=k} score_j (.) xi_j for the scores of f; k = 0 gives the mean.
Density project(const FpcaResult& result, const Density& f, std::size_t k);

/// (mean (+) m sqrt(rho_j) (.) xi_j, mean (-) m sqrt(rho_j) (.) xi_j), j is 1-based.
std::pair<Density, Density> harmonic(const FpcaResult& result, std::size_t j, double multiple = 2.0);

struct ScoreTable {
  std::vector<std::string> ids;
  std::vector<std::string> components;  // "pc1", "pc2", ...
  Eigen::MatrixXd scores;
};

ScoreTable scores_table(const FpcaResult& result, std::vector<std::string> ids);

}  // namespace wbayes
