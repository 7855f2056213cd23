#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wbayes/grid.hpp"

namespace wbayes {

enum class ReferenceKind { lebesgue, uniform_unit, exponential, sample_mean, custom };

/**
 * Reference measure P given by its strictly positive lambda-density p on a
 * grid, together with its total mass P(Omega). The reference fixes the origin
 * of the Bayes space B^2(P) and, through the scale of p, its metric.
 */
class ReferenceMeasure {
 public:
  ReferenceMeasure(Grid grid, std::vector<double> density,
                   ReferenceKind kind = ReferenceKind::custom, std::string label = "custom");

  const Grid& grid() const { return state_->grid; }
  std::span<const double> density() const { return state_->p; }
  std::span<const double> sqrt_density() const { return state_->sqrt_p; }
  std::span<const double> log_density() const { return state_->log_p; }
  /// P(Omega)
  double total() const { return state_->total; }
  /// sqrt(P)(Omega) = integral of sqrt(p) d lambda
  double sqrt_total() const { return state_->sqrt_total; }
  ReferenceKind kind() const { return state_->kind; }
  /// Spec string in the CLI mini-language (lebesgue, uniform, exp:<delta>, mean, custom).
  const std::string& label() const { return state_->label; }
  bool is_lebesgue() const { return state_->kind == ReferenceKind::lebesgue; }

  friend bool operator==(const ReferenceMeasure& lhs, const ReferenceMeasure& rhs);

 private:
  struct State {
    Grid grid;
    std::vector<double> p;
    std::vector<double> sqrt_p;
    std::vector<double> log_p;
    double total;
    double sqrt_total;
    ReferenceKind kind;
    std::string label;
  };
  std::shared_ptr<const State> state_;
};

/**
 * Grid-sampled representative of a B-equivalence class of measures, stored
 * as its density with respect to a reference measure.
 *
 * Both the values and their logarithms are kept. Densities produced by the
 * weighting maps can span thousands of units in log scale, so the log form is
 * authoritative for every computation and values() may underflow to zero in
 * such cases.
 */
class Density {
 public:
  /// Values must be finite and strictly positive. No renormalization.
  static Density from_values(ReferenceMeasure reference, std::vector<double> values);
  /// Log-values must be finite. No renormalization.
  static Density from_log(ReferenceMeasure reference, std::vector<double> log_values);

  const ReferenceMeasure& reference() const { return reference_; }
  const Grid& grid() const { return reference_.grid(); }
  std::span<const double> values() const { return values_; }
  std::span<const double> log_values() const { return log_values_; }
  std::size_t size() const { return values_.size(); }

  /// integral of the density against its reference, mu(Omega)
  double mass() const;

 private:
  Density(ReferenceMeasure reference, std::vector<double> values, std::vector<double> log_values);

  ReferenceMeasure reference_;
  std::vector<double> values_;
  std::vector<double> log_values_;
};

ReferenceMeasure reference_lebesgue(const Grid& grid);
ReferenceMeasure reference_uniform_unit(const Grid& grid);
/// p(t) proportional to exp(-delta t), normalized to unit total. delta = 0 gives the uniform unit reference.
ReferenceMeasure reference_exponential(const Grid& grid, double delta);
/// Geometric mean of lambda-densities, rescaled to total lambda(Omega).
ReferenceMeasure reference_from_mean(std::span<const Density> sample);

/// Chain rule f_new = f_old * p_old / p_new, returned as the canonical representative.
Density change_reference(const Density& f, const ReferenceMeasure& target);

/// B-equivalent representative whose integral w.r.t. the reference equals P(Omega).
Density normalize_representative(const Density& f);
/// Builds the canonical representative directly from log-values.
Density normalized_from_log(const ReferenceMeasure& reference, std::vector<double> log_values);

/// Constant density 1, the neutral element of B^2(P).
Density neutral(const ReferenceMeasure& reference);

/// max - min of log(f/g) over the grid; zero iff f and g are B-equivalent.
double log_ratio_spread(const Density& f, const Density& g);
bool b_equivalent(const Density& f, const Density& g, double tolerance = 1e-10);

void require_same_reference(const ReferenceMeasure& lhs, const ReferenceMeasure& rhs);

// CLI mini-language: lebesgue | uniform | exp:<delta> | mean
struct ReferenceSpec {
  ReferenceKind kind = ReferenceKind::lebesgue;
  double delta = 0.0;
  std::string text = "lebesgue";
};

ReferenceSpec parse_reference_spec(std::string_view text);
std::vector<ReferenceSpec> parse_reference_list(std::string_view comma_separated);
/// Builds the measure for a spec; `mean` needs the (lambda-density) sample.
ReferenceMeasure resolve_reference(const ReferenceSpec& spec, const Grid& grid,
                                   std::span<const Density> sample = {});

}  // namespace wbayes
