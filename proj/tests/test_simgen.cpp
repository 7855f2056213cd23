#include <cmath>
#include <random>

#include <doctest.h>

#include "support.hpp"
#include "wbayes/clr.hpp"
#include "wbayes/sfpca.hpp"
#include "wbayes/simgen.hpp"

using namespace wbayes;

TEST_CASE("design parameters") {
  const auto first = design_lognormal_params(1);
  CHECK(first.mu == doctest::Approx(0.6));
  CHECK(first.sigma == doctest::Approx(0.5));
  const auto last = design_lognormal_params(81);
  CHECK(last.mu == doctest::Approx(2.6));
  CHECK(last.sigma == doctest::Approx(1.06));
  const auto tenth = design_lognormal_params(10);
  CHECK(tenth.mu == doctest::Approx(0.85));
  CHECK(tenth.sigma == doctest::Approx(0.5));
  CHECK_THROWS_AS(design_lognormal_params(0), std::invalid_argument);
  CHECK_THROWS_AS(design_lognormal_params(82), std::invalid_argument);
}

TEST_CASE("closed-form clr agrees with the numerical clr") {
  const Grid g = make_grid(1.0, 10.0, 2048);
  const auto sample = design_lognormal_sample(g);
  REQUIRE(sample.densities.size() == 81);
  CHECK(sample.ids.front() == "1");
  CHECK(sample.ids.back() == "81");
  for (std::size_t i = 0; i < 81; ++i) {
    const auto& f = sample.densities[i];
    // numerical clr w.r.t. lambda: log f minus its lambda-average
    std::vector<double> c(f.log_values().begin(), f.log_values().end());
    const double avg = g.integrate(c) / g.length();
    for (auto& v : c) v -= avg;
    CHECK(testing::max_abs_diff(c, lognormal_clr(sample.params[i], g)) <= 1e-3);
  }
}

TEST_CASE("closed form on a different interval") {
  const LogNormalParams p{0.3, 0.8, 0.5, 4.0};
  const Grid g = make_grid(0.5, 4.0, 4001);
  const auto f = lognormal_density(p, g);
  const auto c = clr_p(f);
  CHECK(testing::max_abs_diff(c.values(), lognormal_clr(p, g)) <= 1e-5);
}

TEST_CASE("density mode sits at exp(mu - sigma^2)") {
  const Grid g = make_grid(1.0, 10.0, 8193);
  const LogNormalParams p{2.0, 0.6, 1.0, 10.0};
  const auto f = lognormal_density(p, g);
  const auto v = f.values();
  const auto k = static_cast<std::size_t>(std::distance(v.begin(), std::max_element(v.begin(), v.end())));
  CHECK(std::abs(g.nodes()[k] - std::exp(2.0 - 0.36)) <= g.step());
  CHECK(f.mass() == doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("the design sample is two-dimensional") {
  const Grid g = make_grid(1.0, 10.0, 512);
  const auto sample = design_lognormal_sample(g);
  const auto r = wsfpca(sample.densities, 3);
  CHECK(r.explained_ratio[2] <= 1e-10);
  CHECK(r.explained_ratio[0] + r.explained_ratio[1] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("truncated log-normal sampler") {
  std::mt19937_64 rng(7);
  const LogNormalParams p{1.6, 0.7, 1.0, 10.0};
  const auto x = sample_truncated_lognormal(p, 20000, rng);
  CHECK(x.size() == 20000);
  double mean_log = 0.0;
  for (double v : x) {
    CHECK(v >= 1.0);
    CHECK(v <= 10.0);
    mean_log += std::log(v);
  }
  mean_log /= 20000.0;
  // mean of a normal truncated to [ln a, ln b]
  const auto phi = [](double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI); };
  const auto cdf = [](double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); };
  const double alpha = (std::log(1.0) - 1.6) / 0.7, beta = (std::log(10.0) - 1.6) / 0.7;
  const double expected = 1.6 + 0.7 * (phi(alpha) - phi(beta)) / (cdf(beta) - cdf(alpha));
  CHECK(std::abs(mean_log - expected) < 0.02);
  std::mt19937_64 rng2(7);
  CHECK(sample_truncated_lognormal(p, 20000, rng2) == x);
  CHECK_THROWS_AS(lognormal_density(p, make_grid(-1.0, 1.0, 10)), std::invalid_argument);
}

TEST_CASE("mean reference of the design is the exponentiated average clr") {
  const Grid g = make_grid(1.0, 10.0, 1024);
  const auto sample = design_lognormal_sample(g);
  const auto m = reference_from_mean(sample.densities);
  std::vector<double> avg(g.size(), 0.0);
  for (const auto& p : sample.params) {
    const auto c = lognormal_clr(p, g);
    for (std::size_t k = 0; k < g.size(); ++k) avg[k] += c[k] / 81.0;
  }
  std::vector<double> ratio(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) ratio[k] = m.density()[k] / std::exp(avg[k]);
  const auto [lo, hi] = std::minmax_element(ratio.begin(), ratio.end());
  CHECK((*hi - *lo) / *hi < 1e-6);
}
