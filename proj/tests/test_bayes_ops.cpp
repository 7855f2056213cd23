#include <cmath>
#include <random>

#include <doctest.h>

#include "support.hpp"
#include "wbayes/bayes_ops.hpp"
#include "wbayes/clr.hpp"

using namespace wbayes;
using testing::double_integral_inner;

namespace {

double rel_gap(double a, double b, double scale) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), scale}); }

}  // namespace

TEST_CASE("vector-space axioms hold up to B-equivalence") {
  const Grid g = make_grid(1.0, 10.0, 257);
  std::mt19937_64 rng(11);
  const auto lambda_sample = testing::random_lambda_sample(g, 4, rng);
  for (const auto& ref : testing::reference_family(g, lambda_sample)) {
    const auto f = testing::random_density(ref, rng);
    const auto h = testing::random_density(ref, rng);
    const auto e = neutral(ref);
    const double a = 0.7, b = -1.9;
    CHECK(b_equivalent(perturb(f, h), perturb(h, f)));
    CHECK(b_equivalent(perturb(f, e), f));
    CHECK(b_equivalent(perturb(f, inverse(f)), e));
    CHECK(b_equivalent(power(a, power(b, f)), power(a * b, f)));
    CHECK(b_equivalent(power(a + b, f), perturb(power(a, f), power(b, f))));
    CHECK(b_equivalent(power(a, perturb(f, h)), perturb(power(a, f), power(a, h))));
    CHECK(b_equivalent(power(1.0, f), f));
    CHECK(b_equivalent(subtract(f, h), perturb(f, inverse(h))));
  }
}

TEST_CASE("inner product matches the double-integral form") {
  const Grid g = make_grid(1.0, 10.0, 128);
  std::mt19937_64 rng(12);
  const auto lambda_sample = testing::random_lambda_sample(g, 4, rng);
  for (const auto& ref : testing::reference_family(g, lambda_sample)) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto f = testing::random_density(ref, rng);
      const auto h = testing::random_density(ref, rng);
      const double direct = inner_product(f, h);
      const double oracle = double_integral_inner(f, h);
      CHECK(rel_gap(direct, oracle, norm(f) * norm(h)) < 1e-10);
    }
  }
}

TEST_CASE("inner product is bilinear and satisfies Cauchy-Schwarz") {
  const Grid g = make_grid(1.0, 10.0, 257);
  std::mt19937_64 rng(13);
  const auto ref = reference_exponential(g, 0.75);
  for (int rep = 0; rep < 20; ++rep) {
    const auto f = testing::random_density(ref, rng);
    const auto h = testing::random_density(ref, rng);
    const auto k = testing::random_density(ref, rng);
    CHECK(std::abs(inner_product(f, h)) <= norm(f) * norm(h) * (1.0 + 1e-12));
    const double lhs = inner_product(perturb(power(2.5, f), h), k);
    const double rhs = 2.5 * inner_product(f, k) + inner_product(h, k);
    CHECK(rel_gap(lhs, rhs, norm(k) * (2.5 * norm(f) + norm(h))) < 1e-12);
    CHECK(inner_product(f, h) == doctest::Approx(inner_product(h, f)).epsilon(1e-13));
    CHECK(distance(f, h) == doctest::Approx(norm(subtract(f, h))).epsilon(1e-12));
  }
  CHECK(norm(neutral(ref)) == doctest::Approx(0.0));
}

TEST_CASE("inner product is invariant under B-equivalence") {
  const Grid g = make_grid(1.0, 10.0, 65);
  std::mt19937_64 rng(14);
  const auto ref = reference_uniform_unit(g);
  const auto f = testing::random_density(ref, rng);
  const auto h = testing::random_density(ref, rng);
  std::vector<double> scaled(f.log_values().begin(), f.log_values().end());
  for (auto& l : scaled) l += 17.0;
  CHECK(inner_product(Density::from_log(ref, scaled), h) == doctest::Approx(inner_product(f, h)).epsilon(1e-12));
}

TEST_CASE("dominating reference gives larger distances") {
  const Grid g = make_grid(1.0, 10.0, 129);
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto lambda = reference_lebesgue(g);
  for (int rep = 0; rep < 30; ++rep) {
    std::vector<double> q(g.size()), p(g.size());
    const auto lq = testing::random_log_curve(g, rng);
    for (std::size_t k = 0; k < g.size(); ++k) {
      q[k] = std::exp(lq[k]);
      p[k] = q[k] * (1.0 + 2.0 * u(rng));
    }
    const ReferenceMeasure big(g, p), small(g, q);
    const auto f = testing::random_density(lambda, rng);
    const auto h = testing::random_density(lambda, rng);
    const double dp = distance(change_reference(f, big), change_reference(h, big));
    const double dq = distance(change_reference(f, small), change_reference(h, small));
    CHECK(dp >= dq - 1e-12);
  }
}

TEST_CASE("sample mean and centring") {
  const Grid g = make_grid(1.0, 10.0, 129);
  std::mt19937_64 rng(16);
  const auto ref = reference_exponential(g, 0.25);
  std::vector<Density> sample;
  for (int i = 0; i < 6; ++i) sample.push_back(testing::random_density(ref, rng));
  const auto m = sample_mean(sample);
  Density acc = neutral(ref);
  for (const auto& f : sample) acc = perturb(acc, f);
  CHECK(b_equivalent(m, power(1.0 / 6.0, acc)));
  const auto c = center(sample);
  CHECK(b_equivalent(sample_mean(c), neutral(ref), 1e-10));
  // the mean minimizes the sum of squared distances
  double at_mean = 0.0, off_mean = 0.0;
  const auto shifted = perturb(m, power(0.05, sample[0]));
  for (const auto& f : sample) {
    at_mean += std::pow(distance(f, m), 2);
    off_mean += std::pow(distance(f, shifted), 2);
  }
  CHECK(at_mean < off_mean);
}
