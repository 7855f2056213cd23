#include "wbayes/measure.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace wbayes {

namespace {

std::string format_delta(double delta) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), delta);
  return "exp:" + std::string(buf, res.ptr);
}

// log of sum_k w_k exp(log_f_k + log_m_k), stable for wide log ranges
double log_integral(const Grid& grid, std::span<const double> log_f, std::span<const double> log_m) {
  const auto w = grid.weights();
  double peak = -INFINITY;
  for (std::size_t k = 0; k < log_f.size(); ++k) peak = std::max(peak, log_f[k] + log_m[k]);
  double sum = 0.0;
  for (std::size_t k = 0; k < log_f.size(); ++k) sum += w[k] * std::exp(log_f[k] + log_m[k] - peak);
  return peak + std::log(sum);
}

std::vector<double> exp_all(std::span<const double> logs) {
  std::vector<double> out(logs.size());
  std::transform(logs.begin(), logs.end(), out.begin(), [](double v) { return std::exp(v); });
  return out;
}

}  // namespace

ReferenceMeasure::ReferenceMeasure(Grid grid, std::vector<double> density, ReferenceKind kind,
                                   std::string label) {
  if (density.size() != grid.size()) {
    throw std::invalid_argument("reference density length does not match grid");
  }
  for (double v : density) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw std::invalid_argument("reference density must be finite and strictly positive");
    }
  }
  std::vector<double> sqrt_p(density.size());
  std::vector<double> log_p(density.size());
  for (std::size_t k = 0; k < density.size(); ++k) {
    sqrt_p[k] = std::sqrt(density[k]);
    log_p[k] = std::log(density[k]);
  }
  const double total = grid.integrate(density);
  const double sqrt_total = grid.integrate(sqrt_p);
  if (!std::isfinite(total) || !(total > 0.0)) {
    throw std::invalid_argument("reference total mass must be finite and positive");
  }
  state_ = std::make_shared<State>(State{std::move(grid), std::move(density), std::move(sqrt_p),
                                         std::move(log_p), total, sqrt_total, kind,
                                         std::move(label)});
}

bool operator==(const ReferenceMeasure& lhs, const ReferenceMeasure& rhs) {
  if (lhs.state_ == rhs.state_) return true;
  return lhs.grid() == rhs.grid() && lhs.state_->p == rhs.state_->p;
}

Density::Density(ReferenceMeasure reference, std::vector<double> values,
                 std::vector<double> log_values)
    : reference_(std::move(reference)), values_(std::move(values)), log_values_(std::move(log_values)) {}

Density Density::from_values(ReferenceMeasure reference, std::vector<double> values) {
  if (values.size() != reference.grid().size()) {
    throw std::invalid_argument("density length does not match grid");
  }
  std::vector<double> logs(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k]) || !(values[k] > 0.0)) {
      throw std::invalid_argument("density values must be finite and strictly positive");
    }
    logs[k] = std::log(values[k]);
  }
  return Density(std::move(reference), std::move(values), std::move(logs));
}

Density Density::from_log(ReferenceMeasure reference, std::vector<double> log_values) {
  if (log_values.size() != reference.grid().size()) {
    throw std::invalid_argument("density length does not match grid");
  }
  for (double v : log_values) {
    if (!std::isfinite(v)) throw std::invalid_argument("density log-values must be finite");
  }
  auto values = exp_all(log_values);
  return Density(std::move(reference), std::move(values), std::move(log_values));
}

double Density::mass() const {
  return std::exp(log_integral(grid(), log_values_, reference_.log_density()));
}

ReferenceMeasure reference_lebesgue(const Grid& grid) {
  return ReferenceMeasure(grid, std::vector<double>(grid.size(), 1.0), ReferenceKind::lebesgue,
                          "lebesgue");
}

ReferenceMeasure reference_uniform_unit(const Grid& grid) {
  return ReferenceMeasure(grid, std::vector<double>(grid.size(), 1.0 / grid.length()),
                          ReferenceKind::uniform_unit, "uniform");
}

ReferenceMeasure reference_exponential(const Grid& grid, double delta) {
  if (!std::isfinite(delta)) throw std::invalid_argument("exponential reference needs finite delta");
  if (delta == 0.0) return reference_uniform_unit(grid);
  const auto t = grid.nodes();
  std::vector<double> log_p(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) log_p[k] = -delta * t[k];
  const std::vector<double> zeros(t.size(), 0.0);
  const double shift = log_integral(grid, log_p, zeros);
  std::vector<double> p(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    p[k] = std::exp(log_p[k] - shift);
    if (!(p[k] > 0.0) || !std::isfinite(p[k])) {
      throw std::invalid_argument("exponential reference underflows for delta = " +
                                  std::to_string(delta) + " on this domain");
    }
  }
  return ReferenceMeasure(grid, std::move(p), ReferenceKind::exponential, format_delta(delta));
}

ReferenceMeasure reference_from_mean(std::span<const Density> sample) {
  if (sample.empty()) throw std::invalid_argument("mean reference needs a non-empty sample");
  const Grid& grid = sample.front().grid();
  const std::size_t n = grid.size();
  std::vector<double> log_mean(n, 0.0);
  for (const auto& f : sample) {
    require_same_grid(grid, f.grid());
    if (!f.reference().is_lebesgue()) {
      throw std::invalid_argument("mean reference expects lambda-densities");
    }
    const auto l = f.log_values();
    for (std::size_t k = 0; k < n; ++k) log_mean[k] += l[k];
  }
  const double inv_n = 1.0 / static_cast<double>(sample.size());
  for (auto& v : log_mean) v *= inv_n;
  const std::vector<double> zeros(n, 0.0);
  const double shift = log_integral(grid, log_mean, zeros) - std::log(grid.length());
  for (auto& v : log_mean) v -= shift;
  return ReferenceMeasure(grid, exp_all(log_mean), ReferenceKind::sample_mean, "mean");
}

Density normalized_from_log(const ReferenceMeasure& reference, std::vector<double> log_values) {
  if (log_values.size() != reference.grid().size()) {
    throw std::invalid_argument("density length does not match grid");
  }
  for (double v : log_values) {
    if (!std::isfinite(v)) throw std::invalid_argument("density log-values must be finite");
  }
  const double shift =
      std::log(reference.total()) - log_integral(reference.grid(), log_values, reference.log_density());
  for (auto& v : log_values) v += shift;
  return Density::from_log(reference, std::move(log_values));
}

Density normalize_representative(const Density& f) {
  return normalized_from_log(f.reference(), {f.log_values().begin(), f.log_values().end()});
}

Density change_reference(const Density& f, const ReferenceMeasure& target) {
  require_same_grid(f.grid(), target.grid());
  const auto l = f.log_values();
  const auto lp_old = f.reference().log_density();
  const auto lp_new = target.log_density();
  std::vector<double> out(l.size());
  for (std::size_t k = 0; k < l.size(); ++k) out[k] = l[k] + lp_old[k] - lp_new[k];
  return normalized_from_log(target, std::move(out));
}

Density neutral(const ReferenceMeasure& reference) {
  return normalized_from_log(reference, std::vector<double>(reference.grid().size(), 0.0));
}

double log_ratio_spread(const Density& f, const Density& g) {
  require_same_grid(f.grid(), g.grid());
  const auto a = f.log_values();
  const auto b = g.log_values();
  double lo = INFINITY;
  double hi = -INFINITY;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return hi - lo;
}

bool b_equivalent(const Density& f, const Density& g, double tolerance) {
  return log_ratio_spread(f, g) <= tolerance;
}

void require_same_reference(const ReferenceMeasure& lhs, const ReferenceMeasure& rhs) {
  if (!(lhs == rhs)) {
    throw std::invalid_argument("densities are expressed w.r.t. different reference measures");
  }
}

ReferenceSpec parse_reference_spec(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  ReferenceSpec spec;
  spec.text = std::string(trimmed);
  if (trimmed == "lebesgue") {
    spec.kind = ReferenceKind::lebesgue;
  } else if (trimmed == "uniform") {
    spec.kind = ReferenceKind::uniform_unit;
  } else if (trimmed == "mean") {
    spec.kind = ReferenceKind::sample_mean;
  } else if (trimmed.starts_with("exp:")) {
    const std::string number(trimmed.substr(4));
    char* end = nullptr;
    const double delta = std::strtod(number.c_str(), &end);
    if (number.empty() || end != number.c_str() + number.size() || !std::isfinite(delta)) {
      throw std::invalid_argument("bad exponential reference '" + spec.text + "'");
    }
    spec.kind = ReferenceKind::exponential;
    spec.delta = delta;
  } else {
    throw std::invalid_argument("unknown reference '" + spec.text +
                                "' (expected lebesgue, uniform, exp:<delta> or mean)");
  }
  return spec;
}

std::vector<ReferenceSpec> parse_reference_list(std::string_view comma_separated) {
  std::vector<ReferenceSpec> out;
  std::size_t start = 0;
  while (start <= comma_separated.size()) {
    const auto stop = comma_separated.find(',', start);
    const auto piece = comma_separated.substr(
        start, stop == std::string_view::npos ? std::string_view::npos : stop - start);
    out.push_back(parse_reference_spec(piece));
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return out;
}

ReferenceMeasure resolve_reference(const ReferenceSpec& spec, const Grid& grid,
                                   std::span<const Density> sample) {
  switch (spec.kind) {
    case ReferenceKind::lebesgue:
      return reference_lebesgue(grid);
    case ReferenceKind::uniform_unit:
      return reference_uniform_unit(grid);
    case ReferenceKind::exponential: {
      const auto ref = reference_exponential(grid, spec.delta);
      if (spec.delta == 0.0) return ref;
      return ReferenceMeasure(grid, {ref.density().begin(), ref.density().end()},
                              ReferenceKind::exponential, spec.text);
    }
    case ReferenceKind::sample_mean:
      if (sample.empty()) throw std::invalid_argument("mean reference needs the sample");
      return reference_from_mean(sample);
    case ReferenceKind::custom:
      break;
  }
  throw std::invalid_argument("custom references cannot be resolved from a spec");
}

}  // namespace wbayes
