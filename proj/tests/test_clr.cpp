#include <cmath>
#include <random>

#include <doctest.h>

#include "support.hpp"
#include "wbayes/bayes_ops.hpp"
#include "wbayes/clr.hpp"

using namespace wbayes;
using testing::max_abs_diff;

namespace {

double scale_of(std::span<const double> v) {
  double m = 1.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST_CASE("clr transforms satisfy their constraints") {
  const Grid g = make_grid(1.0, 10.0, 257);
  std::mt19937_64 rng(21);
  const auto lambda_sample = testing::random_lambda_sample(g, 4, rng);
  for (const auto& ref : testing::reference_family(g, lambda_sample)) {
    const auto f = testing::random_density(ref, rng);
    CHECK(clr_p(f).constraint_residual() < 1e-12);
    CHECK(clr_u(f).constraint_residual() < 1e-12);
    CHECK(clr_sqrt_p(lambda_sample[0], ref).constraint_residual() < 1e-12);
    CHECK(clr_u(f).space() == ClrSpace::l2_0_sqrtp_lambda);
  }
}

TEST_CASE("clr_u equals clr_sqrtP after unweighting") {
  const Grid g = make_grid(1.0, 10.0, 257);
  std::mt19937_64 rng(22);
  const auto lambda_sample = testing::random_lambda_sample(g, 4, rng);
  for (const auto& ref : testing::reference_family(g, lambda_sample)) {
    for (int rep = 0; rep < 10; ++rep) {
      const auto f = testing::random_density(ref, rng);
      const auto lhs = clr_u(f);
      const auto rhs = clr_sqrt_p(omega_inverse(f), ref);
      CHECK(max_abs_diff(lhs.values(), rhs.values()) <= 1e-10 * scale_of(lhs.values()));
      // and omega2_inverse of clr_P gives the same function
      CHECK(max_abs_diff(lhs.values(), omega2_inverse(clr_p(f)).values()) <= 1e-12 * scale_of(lhs.values()));
    }
  }
}

TEST_CASE("two formulas for the clr_u inverse agree") {
  const Grid g = make_grid(1.0, 10.0, 257);
  std::mt19937_64 rng(23);
  const auto lambda_sample = testing::random_lambda_sample(g, 4, rng);
  for (const auto& ref : testing::reference_family(g, lambda_sample)) {
    for (int rep = 0; rep < 10; ++rep) {
      const auto psi = clr_u(testing::random_density(ref, rng));
      const auto direct = clr_u_inverse(psi);
      const auto composed = omega(clr_sqrt_p_inverse(psi), ref);
      CHECK(log_ratio_spread(direct, composed) <= 1e-10 * scale_of(direct.log_values()));
    }
  }
}

TEST_CASE("bijection round trips") {
  const Grid g = make_grid(1.0, 10.0, 257);
  std::mt19937_64 rng(24);
  const auto lambda_sample = testing::random_lambda_sample(g, 4, rng);
  for (const auto& ref : testing::reference_family(g, lambda_sample)) {
    const auto f = testing::random_density(ref, rng);
    const auto phi = lambda_sample[1];
    CHECK(log_ratio_spread(omega(omega_inverse(f), ref), f) <= 1e-10 * scale_of(f.log_values()));
    CHECK(log_ratio_spread(omega_inverse(omega(phi, ref)), phi) <= 1e-10 * scale_of(phi.log_values()));
    const auto xi = clr_p(f);
    CHECK(max_abs_diff(omega2(omega2_inverse(xi)).values(), xi.values()) <= 1e-12 * scale_of(xi.values()));
    CHECK(max_abs_diff(clr_p(clr_p_inverse(xi)).values(), xi.values()) <= 1e-10 * scale_of(xi.values()));
    const auto psi = clr_u(f);
    CHECK(max_abs_diff(clr_u(clr_u_inverse(psi)).values(), psi.values()) <= 1e-10 * scale_of(psi.values()));
  }
}

TEST_CASE("clr_u is an isometry onto L2(lambda)") {
  const Grid g = make_grid(1.0, 10.0, 257);
  std::mt19937_64 rng(25);
  const auto lambda_sample = testing::random_lambda_sample(g, 4, rng);
  for (const auto& ref : testing::reference_family(g, lambda_sample)) {
    const auto f = testing::random_density(ref, rng);
    const auto h = testing::random_density(ref, rng);
    const double via_u = g.inner(clr_u(f).values(), clr_u(h).values());
    CHECK(via_u == doctest::Approx(inner_product(f, h)).epsilon(1e-12));
  }
}

TEST_CASE("clr of a log-linear density under Lebesgue reference") {
  const Grid g = make_grid(0.0, 2.0, 101);
  std::vector<double> logs(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) logs[k] = 3.0 * g.nodes()[k];
  const auto c = clr_p(Density::from_log(reference_lebesgue(g), logs));
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(c.values()[k] == doctest::Approx(3.0 * (g.nodes()[k] - 1.0)));
}

TEST_CASE("inverse transforms reject functions outside their space") {
  const Grid g = make_grid(1.0, 10.0, 33);
  const auto ref = reference_exponential(g, 0.5);
  const ClrFunction bad(ClrSpace::l2_0_p, ref, std::vector<double>(g.size(), 1.0));
  CHECK_THROWS_AS(clr_p_inverse(bad), std::invalid_argument);
  CHECK_THROWS_AS(clr_u_inverse(bad), std::invalid_argument);
  const ClrFunction bad_u(ClrSpace::l2_0_sqrtp_lambda, ref, std::vector<double>(g.size(), 1.0));
  CHECK_THROWS_AS(clr_u_inverse(bad_u), std::invalid_argument);
  CHECK_THROWS_AS(ClrFunction(ClrSpace::l2_0_lambda, ref, std::vector<double>(g.size(), 0.0)), std::invalid_argument);
}

TEST_CASE("batched clr_u matches the single version") {
  const Grid g = make_grid(1.0, 10.0, 129);
  std::mt19937_64 rng(26);
  const auto ref = reference_exponential(g, 1.25);
  std::vector<Density> sample;
  for (int i = 0; i < 9; ++i) sample.push_back(testing::random_density(ref, rng));
  const auto batch = clr_u_batch(sample);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto single = clr_u(sample[i]);
    CHECK(max_abs_diff(batch[i].values(), single.values()) == 0.0);
  }
}
