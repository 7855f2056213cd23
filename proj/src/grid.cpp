#include "wbayes/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wbayes {

Grid::Grid(double a, double b, std::size_t n) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("grid bounds must be finite");
  }
  if (!(b > a)) {
    throw std::invalid_argument("grid requires b > a");
  }
  if (n < 3) {
    throw std::invalid_argument("grid requires at least 3 nodes, got " + std::to_string(n));
  }
  auto state = std::make_shared<State>();
  state->a = a;
  state->b = b;
  state->h = (b - a) / static_cast<double>(n - 1);
  state->nodes.resize(n);
  state->weights.assign(n, state->h);
  for (std::size_t k = 0; k < n; ++k) {
    state->nodes[k] = a + static_cast<double>(k) * state->h;
  }
  state->nodes.back() = b;
  state->weights.front() = state->h / 2.0;
  state->weights.back() = state->h / 2.0;
  state_ = std::move(state);
}

namespace {

void check_length(const Grid& grid, std::size_t len) {
  if (len != grid.size()) {
    throw std::invalid_argument("expected " + std::to_string(grid.size()) +
                                " grid values, got " + std::to_string(len));
  }
}

}  // namespace

double Grid::integrate(std::span<const double> values) const {
  check_length(*this, values.size());
  const auto& w = state_->weights;
  double sum = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) sum += w[k] * values[k];
  return sum;
}

double Grid::integrate(std::span<const double> values, std::span<const double> measure) const {
  check_length(*this, values.size());
  check_length(*this, measure.size());
  const auto& w = state_->weights;
  double sum = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) sum += w[k] * measure[k] * values[k];
  return sum;
}

double Grid::inner(std::span<const double> u, std::span<const double> v,
                   std::span<const double> measure) const {
  check_length(*this, u.size());
  check_length(*this, v.size());
  check_length(*this, measure.size());
  const auto& w = state_->weights;
  double sum = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) sum += w[k] * measure[k] * u[k] * v[k];
  return sum;
}

double Grid::inner(std::span<const double> u, std::span<const double> v) const {
  check_length(*this, u.size());
  check_length(*this, v.size());
  const auto& w = state_->weights;
  double sum = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) sum += w[k] * u[k] * v[k];
  return sum;
}

bool operator==(const Grid& lhs, const Grid& rhs) {
  if (lhs.state_ == rhs.state_) return true;
  return lhs.state_->a == rhs.state_->a && lhs.state_->b == rhs.state_->b &&
         lhs.size() == rhs.size();
}

Grid make_grid(double a, double b, std::size_t n) { return Grid(a, b, n); }

double integrate(const Grid& grid, std::span<const double> values) {
  return grid.integrate(values);
}

void require_same_grid(const Grid& lhs, const Grid& rhs) {
  if (!(lhs == rhs)) {
    throw std::invalid_argument("functions live on different grids");
  }
}

}  // namespace wbayes
