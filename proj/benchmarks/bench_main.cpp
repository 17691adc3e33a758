#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "swinv/helmholtz_forward.hpp"
#include "swinv/levy_forward.hpp"
#include "swinv/levy_inverse.hpp"
#include "swinv/tikhonov.hpp"

using namespace swinv;

namespace {

SourcePair sin_sources(int modes, std::size_t nt) {
  const Grid space = make_uniform_grid(0.0, std::numbers::pi, 100);
  const Grid time = make_uniform_grid(0.0, 1.0, nt);
  Eigen::VectorXd f(101);
  for (int i = 0; i <= 100; ++i) f[i] = std::sin(space[static_cast<std::size_t>(i)]);
  return SourcePair::build(space, time, SineBasis(std::numbers::pi, modes), f, f,
                           Eigen::VectorXd::Ones(static_cast<Eigen::Index>(nt + 1)));
}

Eigen::MatrixXd helmholtz_stack(int n) {
  const Grid g = make_uniform_grid(0.0, 1.0, static_cast<std::size_t>(n));
  const Eigen::VectorXd x = default_observation_points(200);
  std::vector<Eigen::MatrixXd> blocks;
  std::vector<Eigen::VectorXd> data;
  for (int nu = 1; nu <= 3; ++nu) {
    blocks.push_back(assemble_matrix(nu, x, g));
    data.push_back(Eigen::VectorXd::Zero(200));
  }
  return stack_frequencies(blocks, data).design.stacked;
}

}  // namespace

static void BM_SimulateEnsemble(benchmark::State& state) {
  const SourcePair s = sin_sources(5, 1000);
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_ensemble(s, LevyParams{}, 1.0, 5, n, 0.001, 7, 1));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SimulateEnsemble)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_EnsembleStatistics(benchmark::State& state) {
  const SourcePair s = sin_sources(5, 100);
  const Ensemble e = simulate_ensemble(s, LevyParams{}, 1.0, 5, 2000, 0.001, 7, 1);
  const SineBasis b(std::numbers::pi, 5);
  for (auto _ : state) benchmark::DoNotOptimize(ensemble_statistics(e, s.space, b, 5));
}
BENCHMARK(BM_EnsembleStatistics)->Unit(benchmark::kMillisecond);

static void BM_AssembleMatrix(benchmark::State& state) {
  const Grid g = make_uniform_grid(0.0, 1.0, static_cast<std::size_t>(state.range(0)));
  const Eigen::VectorXd x = default_observation_points(200);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_matrix(2.0, x, g));
}
BENCHMARK(BM_AssembleMatrix)->Arg(200)->Arg(1000);

static void BM_StackedSvd(benchmark::State& state) {
  const Eigen::MatrixXd a = helmholtz_stack(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_svd(a));
}
BENCHMARK(BM_StackedSvd)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_TikhonovFromFactors(benchmark::State& state) {
  const Eigen::MatrixXd a = helmholtz_stack(200);
  const SvdFactors svd = compute_svd(a);
  const Eigen::VectorXd h = Eigen::VectorXd::Ones(a.rows());
  for (auto _ : state) benchmark::DoNotOptimize(tikhonov_solve(svd, h, 1e-6));
}
BENCHMARK(BM_TikhonovFromFactors);

static void BM_TimeKernel(benchmark::State& state) {
  const auto k = static_cast<int>(state.range(0));
  const Eigen::VectorXd h = Eigen::VectorXd::Ones(1001);
  for (auto _ : state) benchmark::DoNotOptimize(TimeKernelMatrix::build(1.0, k, h, 1000));
}
BENCHMARK(BM_TimeKernel)->Arg(5)->Arg(20);

static void BM_CovarianceFit(benchmark::State& state) {
  const TimeKernelMatrix t = TimeKernelMatrix::build(1.0, 5, Eigen::VectorXd::Ones(1001), 1000);
  const LevyParams p{};
  ModalStats st;
  Eigen::VectorXd g(5);
  g << 1.0, -0.5, 0.25, 0.1, -0.05;
  st.mean = Eigen::VectorXd::Zero(5);
  st.cov = p.gamma() * (g * g.transpose()).cwiseProduct(t.I);
  st.cov(0, 1) += 1e-6;
  st.cov(1, 0) += 1e-6;
  st.n_samples = 2000;
  for (auto _ : state) benchmark::DoNotOptimize(fit_covariance(st, t, p, CovarianceFitOptions{}));
}
BENCHMARK(BM_CovarianceFit);
BENCHMARK_MAIN();
