#pragma once

#include <span>
#include <vector>

#include "wbayes/measure.hpp"

namespace wbayes {

// Function space a clr-type transform lands in. Each carries a zero-integral
// constraint against a different measure: P, sqrt(P) or lambda.
enum class ClrSpace {
  l2_0_p,             // L^2_0(P): integral of v dP = 0
  l2_0_sqrtp_lambda,  // L^2_{0,sqrt P}(lambda): integral of v sqrt(p) d lambda = 0
  l2_0_lambda,        // L^2_0(lambda): integral of v d lambda = 0
};

const char* to_string(ClrSpace space);

/// Real function on a grid tagged with the space (and reference) it belongs to.
class ClrFunction {
 public:
  ClrFunction(ClrSpace space, ReferenceMeasure reference, std::vector<double> values);

  ClrSpace space() const { return space_; }
  const ReferenceMeasure& reference() const { return reference_; }
  const Grid& grid() const { return reference_.grid(); }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  /// Grid weight function of the constraint measure (p, sqrt(p) or 1).
  std::span<const double> constraint_measure() const;
  /// |integral of v dM| / (||v||_{L2(M)} * sqrt(M(Omega))); 0 for the zero function.
  double constraint_residual() const;
  /// Throws std::invalid_argument if constraint_residual() exceeds tolerance.
  void require_constraint(double tolerance) const;

 private:
  ClrSpace space_;
  ReferenceMeasure reference_;
  std::vector<double> values_;
};

/// Tolerance applied to inputs of the inverse transforms (values read back
/// from files carry decimal rounding).
inline constexpr double kConstraintTolerance = 1e-8;

ClrFunction clr_p(const Density& f);
Density clr_p_inverse(const ClrFunction& v);

/// B^2-weighting map B^2(lambda) -> B^2(P), phi -> phi^{1/sqrt p}, on the
/// clr representative of phi w.r.t. sqrt(P).
Density omega(const Density& phi, const ReferenceMeasure& reference);
/// B^2-unweighting map B^2(P) -> B^2(lambda), psi -> psi^{sqrt p}, on the
/// clr representative of psi w.r.t. P.
Density omega_inverse(const Density& psi);

/// L^2-weighting map eta -> eta / sqrt(p); L^2_{0,sqrt P}(lambda) -> L^2_0(P).
ClrFunction omega2(const ClrFunction& eta);
/// L^2-unweighting map xi -> xi sqrt(p); L^2_0(P) -> L^2_{0,sqrt P}(lambda).
ClrFunction omega2_inverse(const ClrFunction& xi);

/// Unweighting clr: sqrt(p) * clr_P(f).
ClrFunction clr_u(const Density& f);
Density clr_u_inverse(const ClrFunction& psi);

/// clr of a lambda-density centred against the auxiliary measure sqrt(P).
ClrFunction clr_sqrt_p(const Density& phi, const ReferenceMeasure& reference);
/// exp(psi) as a lambda-density.
Density clr_sqrt_p_inverse(const ClrFunction& psi);

/// clr_u of every element; runs in parallel when OpenMP is available.
std::vector<ClrFunction> clr_u_batch(std::span<const Density> sample);

}  // namespace wbayes
