#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace wbayes {

/**
 * Uniform discretization of a bounded interval [a, b] with trapezoidal
 * quadrature weights (h/2 at the endpoints, h elsewhere).
 *
 * Every function in the library is a vector of values on one Grid. The
 * node/weight arrays are shared between copies, so passing a Grid by value
 * is cheap. Two grids compare equal when they were built from the same
 * (a, b, n); operations on functions from unequal grids are rejected.
 */
class Grid {
 public:
  Grid(double a, double b, std::size_t n);

  double lower() const { return state_->a; }
  double upper() const { return state_->b; }
  double length() const { return state_->b - state_->a; }
  double step() const { return state_->h; }
  std::size_t size() const { return state_->nodes.size(); }

  std::span<const double> nodes() const { return state_->nodes; }
  std::span<const double> weights() const { return state_->weights; }

  /// Trapezoidal integral of grid-sampled values.
  double integrate(std::span<const double> values) const;
  /// Integral of values against a grid-sampled weight function m, i.e. sum w_k m_k v_k.
  double integrate(std::span<const double> values, std::span<const double> measure) const;
  /// sum w_k m_k u_k v_k
  double inner(std::span<const double> u, std::span<const double> v,
               std::span<const double> measure) const;
  double inner(std::span<const double> u, std::span<const double> v) const;

  friend bool operator==(const Grid& lhs, const Grid& rhs);

 private:
  struct State {
    double a;
    double b;
    double h;
    std::vector<double> nodes;
    std::vector<double> weights;
  };
  std::shared_ptr<const State> state_;
};

Grid make_grid(double a, double b, std::size_t n);
double integrate(const Grid& grid, std::span<const double> values);

/// Throws std::invalid_argument unless the two grids are equal.
void require_same_grid(const Grid& lhs, const Grid& rhs);

}  // namespace wbayes
