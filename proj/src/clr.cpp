#include "wbayes/clr.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wbayes {

const char* to_string(ClrSpace space) {
  switch (space) {
    case ClrSpace::l2_0_p:
      return "L2_0(P)";
    case ClrSpace::l2_0_sqrtp_lambda:
      return "L2_0,sqrtP(lambda)";
    case ClrSpace::l2_0_lambda:
      return "L2_0(lambda)";
  }
  return "?";
}

ClrFunction::ClrFunction(ClrSpace space, ReferenceMeasure reference, std::vector<double> values)
    : space_(space), reference_(std::move(reference)), values_(std::move(values)) {
  if (values_.size() != reference_.grid().size()) {
    throw std::invalid_argument("clr function length does not match grid");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("clr function values must be finite");
  }
  if (space_ == ClrSpace::l2_0_lambda && !reference_.is_lebesgue()) {
    throw std::invalid_argument("L2_0(lambda) functions must carry the Lebesgue reference");
  }
}

std::span<const double> ClrFunction::constraint_measure() const {
  switch (space_) {
    case ClrSpace::l2_0_p:
      return reference_.density();
    case ClrSpace::l2_0_sqrtp_lambda:
      return reference_.sqrt_density();
    case ClrSpace::l2_0_lambda:
      break;
  }
  return reference_.density();  // identically 1 for the Lebesgue reference
}

double ClrFunction::constraint_residual() const {
  const auto m = constraint_measure();
  const Grid& g = grid();
  const double norm2 = g.inner(values_, values_, m);
  if (norm2 == 0.0) return 0.0;
  const std::vector<double> ones(values_.size(), 1.0);
  const double mass = g.integrate(ones, m);
  return std::abs(g.integrate(values_, m)) / std::sqrt(norm2 * mass);
}

void ClrFunction::require_constraint(double tolerance) const {
  const double r = constraint_residual();
  if (!(r <= tolerance)) {
    throw std::invalid_argument(std::string("function violates the zero-integral constraint of ") +
                                to_string(space_) + " (relative residual " + std::to_string(r) + ")");
  }
}

namespace {

// v - (integral of v dM) / M(Omega)
std::vector<double> centred(const Grid& grid, std::span<const double> v, std::span<const double> m,
                            double m_total) {
  const double shift = grid.integrate(v, m) / m_total;
  std::vector<double> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] - shift;
  return out;
}

void require_lambda_density(const Density& phi) {
  if (!phi.reference().is_lebesgue()) {
    throw std::invalid_argument("expected a density w.r.t. the Lebesgue reference");
  }
}

void require_unweighted_side(const ClrFunction& psi) {
  if (psi.space() == ClrSpace::l2_0_sqrtp_lambda) return;
  if (psi.space() == ClrSpace::l2_0_lambda) return;  // sqrt(P) = lambda
  throw std::invalid_argument(std::string("expected a function in L2_0,sqrtP(lambda), got ") +
                              to_string(psi.space()));
}

}  // namespace

ClrFunction clr_p(const Density& f) {
  const auto& ref = f.reference();
  auto v = centred(f.grid(), f.log_values(), ref.density(), ref.total());
  return ClrFunction(ClrSpace::l2_0_p, ref, std::move(v));
}

Density clr_p_inverse(const ClrFunction& v) {
  if (v.space() != ClrSpace::l2_0_p) {
    throw std::invalid_argument(std::string("clr_P inverse expects L2_0(P), got ") + to_string(v.space()));
  }
  v.require_constraint(kConstraintTolerance);
  return normalized_from_log(v.reference(), {v.values().begin(), v.values().end()});
}

ClrFunction clr_sqrt_p(const Density& phi, const ReferenceMeasure& reference) {
  require_lambda_density(phi);
  require_same_grid(phi.grid(), reference.grid());
  auto v = centred(phi.grid(), phi.log_values(), reference.sqrt_density(), reference.sqrt_total());
  return ClrFunction(ClrSpace::l2_0_sqrtp_lambda, reference, std::move(v));
}

Density clr_sqrt_p_inverse(const ClrFunction& psi) {
  require_unweighted_side(psi);
  psi.require_constraint(kConstraintTolerance);
  return normalized_from_log(reference_lebesgue(psi.grid()), {psi.values().begin(), psi.values().end()});
}

Density omega(const Density& phi, const ReferenceMeasure& reference) {
  const auto c = clr_sqrt_p(phi, reference);
  const auto v = c.values();
  const auto sqrt_p = reference.sqrt_density();
  std::vector<double> logs(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) logs[k] = v[k] / sqrt_p[k];
  return normalized_from_log(reference, std::move(logs));
}

Density omega_inverse(const Density& psi) {
  const auto c = clr_p(psi);
  const auto v = c.values();
  const auto sqrt_p = psi.reference().sqrt_density();
  std::vector<double> logs(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) logs[k] = v[k] * sqrt_p[k];
  return normalized_from_log(reference_lebesgue(psi.grid()), std::move(logs));
}

ClrFunction omega2(const ClrFunction& eta) {
  require_unweighted_side(eta);
  const auto v = eta.values();
  const auto sqrt_p = eta.reference().sqrt_density();
  std::vector<double> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] / sqrt_p[k];
  return ClrFunction(ClrSpace::l2_0_p, eta.reference(), std::move(out));
}

ClrFunction omega2_inverse(const ClrFunction& xi) {
  if (xi.space() != ClrSpace::l2_0_p) {
    throw std::invalid_argument(std::string("omega2 inverse expects L2_0(P), got ") + to_string(xi.space()));
  }
  const auto v = xi.values();
  const auto sqrt_p = xi.reference().sqrt_density();
  std::vector<double> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] * sqrt_p[k];
  return ClrFunction(ClrSpace::l2_0_sqrtp_lambda, xi.reference(), std::move(out));
}

ClrFunction clr_u(const Density& f) {
  const auto& ref = f.reference();
  auto v = centred(f.grid(), f.log_values(), ref.density(), ref.total());
  const auto sqrt_p = ref.sqrt_density();
  for (std::size_t k = 0; k < v.size(); ++k) v[k] *= sqrt_p[k];
  return ClrFunction(ClrSpace::l2_0_sqrtp_lambda, ref, std::move(v));
}

Density clr_u_inverse(const ClrFunction& psi) {
  require_unweighted_side(psi);
  psi.require_constraint(kConstraintTolerance);
  const auto v = psi.values();
  const auto sqrt_p = psi.reference().sqrt_density();
  std::vector<double> logs(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) logs[k] = v[k] / sqrt_p[k];
  return normalized_from_log(psi.reference(), std::move(logs));
}

std::vector<ClrFunction> clr_u_batch(std::span<const Density> sample) {
  std::vector<std::vector<double>> rows(sample.size());
  const auto count = static_cast<long>(sample.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    const auto& f = sample[static_cast<std::size_t>(i)];
    const auto& ref = f.reference();
    const double shift = f.grid().integrate(f.log_values(), ref.density()) / ref.total();
    const auto l = f.log_values();
    const auto sqrt_p = ref.sqrt_density();
    auto& row = rows[static_cast<std::size_t>(i)];
    row.resize(l.size());
    for (std::size_t k = 0; k < l.size(); ++k) row[k] = (l[k] - shift) * sqrt_p[k];
  }
  std::vector<ClrFunction> out;
  out.reserve(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    out.emplace_back(ClrSpace::l2_0_sqrtp_lambda, sample[i].reference(), std::move(rows[i]));
  }
  return out;
}

}  // namespace wbayes
