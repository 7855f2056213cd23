#include "wbayes/bayes_ops.hpp"

#include <cmath>
#include <stdexcept>

#include "wbayes/clr.hpp"
#include "wbayes/kernels.hpp"

namespace wbayes {

namespace {

void require_compatible(const Density& f, const Density& g) {
  require_same_grid(f.grid(), g.grid());
  require_same_reference(f.reference(), g.reference());
}

void require_sample(std::span<const Density> sample) {
  if (sample.empty()) throw std::invalid_argument("sample is empty");
  for (const auto& f : sample) require_compatible(sample.front(), f);
}

}  // namespace

Density perturb(const Density& f, const Density& g) {
  require_compatible(f, g);
  const auto a = f.log_values();
  const auto b = g.log_values();
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return normalized_from_log(f.reference(), std::move(out));
}

Density power(double alpha, const Density& f) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("powering needs a finite scalar");
  const auto a = f.log_values();
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = alpha * a[k];
  return normalized_from_log(f.reference(), std::move(out));
}

Density inverse(const Density& f) { return power(-1.0, f); }

Density subtract(const Density& f, const Density& g) {
  require_compatible(f, g);
  const auto a = f.log_values();
  const auto b = g.log_values();
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return normalized_from_log(f.reference(), std::move(out));
}

double inner_product(const Density& f, const Density& g) {
  require_compatible(f, g);
  const auto cf = clr_p(f);
  const auto cg = clr_p(g);
  return f.grid().inner(cf.values(), cg.values(), f.reference().density());
}

double norm(const Density& f) {
  const auto c = clr_p(f);
  return std::sqrt(f.grid().inner(c.values(), c.values(), f.reference().density()));
}

double distance(const Density& f, const Density& g) {
  require_compatible(f, g);
  const auto& ref = f.reference();
  const auto a = f.log_values();
  const auto b = g.log_values();
  std::vector<double> diff(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) diff[k] = a[k] - b[k];
  const double shift = f.grid().integrate(diff, ref.density()) / ref.total();
  for (auto& d : diff) d -= shift;
  return std::sqrt(f.grid().inner(diff, diff, ref.density()));
}

Density sample_mean(std::span<const Density> sample) {
  require_sample(sample);
  kernels::RowMatrix logs(static_cast<Eigen::Index>(sample.size()),
                          static_cast<Eigen::Index>(sample.front().size()));
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto l = sample[i].log_values();
    for (std::size_t k = 0; k < l.size(); ++k) logs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = l[k];
  }
  return normalized_from_log(sample.front().reference(), kernels::column_mean(logs));
}

std::vector<Density> center(std::span<const Density> sample) {
  const Density mean = sample_mean(sample);
  std::vector<Density> out;
  out.reserve(sample.size());
  for (const auto& f : sample) out.push_back(subtract(f, mean));
  return out;
}

}  // namespace wbayes
