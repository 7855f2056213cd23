#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "wbayes/kernels.hpp"

namespace {

using wbayes::kernels::RowMatrix;

RowMatrix random_rows(Eigen::Index n_obs, Eigen::Index n_grid) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> z(0.0, 1.0);
  RowMatrix y(n_obs, n_grid);
  for (Eigen::Index i = 0; i < y.size(); ++i) y.data()[i] = z(rng);
  return y;
}

std::vector<double> trapezoid(Eigen::Index n_grid) {
  std::vector<double> w(static_cast<std::size_t>(n_grid), 1.0);
  w.front() = w.back() = 0.5;
  return w;
}

template <Eigen::MatrixXd (*Gram)(const RowMatrix&, std::span<const double>, double)>
void BM_gram(benchmark::State& state) {
  const auto y = random_rows(state.range(0), 2048);
  const auto w = trapezoid(2048);
  for (auto _ : state) {
    auto g = Gram(y, w, 1.0 / static_cast<double>(y.rows()));
    benchmark::DoNotOptimize(g.data());
  }
}

template <std::vector<double> (*Mean)(const RowMatrix&)>
void BM_column_mean(benchmark::State& state) {
  const auto y = random_rows(state.range(0), 2048);
  for (auto _ : state) {
    auto m = Mean(y);
    benchmark::DoNotOptimize(m.data());
  }
}

BENCHMARK(BM_gram<wbayes::kernels::serial::gram>)->Name("gram/serial")->Arg(81)->Arg(256)->Arg(512);
BENCHMARK(BM_gram<wbayes::kernels::parallel::gram>)->Name("gram/parallel")->Arg(81)->Arg(256)->Arg(512);
BENCHMARK(BM_column_mean<wbayes::kernels::serial::column_mean>)->Name("column_mean/serial")->Arg(81)->Arg(512);
BENCHMARK(BM_column_mean<wbayes::kernels::parallel::column_mean>)->Name("column_mean/parallel")->Arg(81)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
