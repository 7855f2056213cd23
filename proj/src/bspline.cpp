#include "wbayes/bspline.hpp"

#include <cmath>
#include <stdexcept>

namespace wbayes {

namespace {
constexpr int kDegree = 3;

double safe_ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }
}  // namespace

CubicBSplineBasis::CubicBSplineBasis(double a, double b, std::vector<double> interior_knots) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
    throw std::invalid_argument("spline basis needs a finite interval with b > a");
  }
  double prev = a;
  for (double k : interior_knots) {
    if (!(k > prev) || !(k < b)) {
      throw std::invalid_argument("interior knots must be strictly increasing inside (a, b)");
    }
    prev = k;
  }
  knots_.assign(kDegree + 1, a);
  knots_.insert(knots_.end(), interior_knots.begin(), interior_knots.end());
  knots_.insert(knots_.end(), kDegree + 1, b);
}

std::vector<double> CubicBSplineBasis::evaluate(double x, int derivative) const {
  if (derivative < 0 || derivative > kDegree) throw std::invalid_argument("derivative order must be 0..3");
  const auto& t = knots_;
  const std::size_t m = t.size();
  if (x < t.front() || x > t.back()) throw std::invalid_argument("spline evaluation outside the basis interval");

  // degree-0 indicators; the right end belongs to the last non-empty span
  std::vector<double> level(m - 1, 0.0);
  std::size_t span = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (t[i] < t[i + 1] && t[i] <= x && (x < t[i + 1] || (x == t.back() && t[i + 1] == t.back()))) {
      span = i;
      break;
    }
  }
  level[span] = 1.0;

  const int value_degree = kDegree - derivative;
  for (int d = 1; d <= value_degree; ++d) {
    std::vector<double> next(m - 1 - static_cast<std::size_t>(d), 0.0);
    for (std::size_t i = 0; i < next.size(); ++i) {
      next[i] = safe_ratio(x - t[i], t[i + d] - t[i]) * level[i] +
                safe_ratio(t[i + d + 1] - x, t[i + d + 1] - t[i + 1]) * level[i + 1];
    }
    level = std::move(next);
  }
  // D^r N_{i,d} = d (D^{r-1} N_{i,d-1} / (t_{i+d} - t_i) - D^{r-1} N_{i+1,d-1} / (t_{i+d+1} - t_{i+1}))
  for (int d = value_degree + 1; d <= kDegree; ++d) {
    std::vector<double> next(m - 1 - static_cast<std::size_t>(d), 0.0);
    for (std::size_t i = 0; i < next.size(); ++i) {
      next[i] = d * (safe_ratio(level[i], t[i + d] - t[i]) -
                     safe_ratio(level[i + 1], t[i + d + 1] - t[i + 1]));
    }
    level = std::move(next);
  }
  return level;
}

std::vector<double> CubicBSplineBasis::integrals() const {
  std::vector<double> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (knots_[i + 4] - knots_[i]) / 4.0;
  return out;
}

Eigen::MatrixXd CubicBSplineBasis::roughness() const {
  const auto nb = static_cast<Eigen::Index>(size());
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(nb, nb);
  // B'' is linear on each knot span, so two-point Gauss-Legendre is exact
  const double node = 1.0 / std::sqrt(3.0);
  for (std::size_t s = 0; s + 1 < knots_.size(); ++s) {
    const double lo = knots_[s];
    const double hi = knots_[s + 1];
    if (!(hi > lo)) continue;
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (double z : {-node, node}) {
      const auto d2 = evaluate(mid + half * z, 2);
      for (Eigen::Index i = 0; i < nb; ++i) {
        for (Eigen::Index j = 0; j < nb; ++j) r(i, j) += half * d2[static_cast<std::size_t>(i)] * d2[static_cast<std::size_t>(j)];
      }
    }
  }
  return r;
}

}  // namespace wbayes
