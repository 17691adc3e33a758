#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstring>

#include "oracles.hpp"
#include "swinv/errors.hpp"
#include "swinv/levy_forward.hpp"
#include "swinv/levy_inverse.hpp"

using namespace swinv;
using oracle::pi;

namespace {

template <class F, class G>
SourcePair make_sources(F f, G g, int K, std::size_t nx = 100, std::size_t nt = 1000, double T = 1.0) {
  const Grid space = make_uniform_grid(0.0, pi, nx);
  const Grid time = make_uniform_grid(0.0, T, nt);
  Eigen::VectorXd fv(static_cast<Eigen::Index>(space.size())), gv(fv.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    fv[static_cast<Eigen::Index>(i)] = f(space[i]);
    gv[static_cast<Eigen::Index>(i)] = g(space[i]);
  }
  return SourcePair::build(space, time, SineBasis(pi, K), fv, gv,
                           Eigen::VectorXd::Ones(static_cast<Eigen::Index>(time.size())));
}

double zero(double) { return 0.0; }
double sine(double x) { return std::sin(x); }

LevyParams params(double b, double s, double lam, double sj) {
  LevyParams p;
  p.drift = b;
  p.volatility = s;
  p.jump_rate = lam;
  p.jump_std = sj;
  return p;
}

}  // namespace

TEST(LevyParams, Validation) {
  EXPECT_NO_THROW(LevyParams{}.validate());
  EXPECT_THROW(params(0, -0.1, 1, 1).validate(), DomainError);
  EXPECT_THROW(params(0, 0.1, -1, 1).validate(), DomainError);
  EXPECT_THROW(params(0, 0.1, 1, -1).validate(), DomainError);
  EXPECT_THROW(params(NAN, 0.1, 1, 1).validate(), DomainError);
  EXPECT_DOUBLE_EQ(params(0, 0.1, 5, 0.1).gamma(), 0.01 + 5 * 0.01);
}

TEST(LevyPath, NoJumpsWithoutRate) {
  for (std::uint64_t s = 0; s < 200; ++s) EXPECT_EQ(sample_levy_path(params(0, 0.1, 0, 1), 1.0, 10, s).n_jumps(), 0u);
}

TEST(LevyPath, StructureAndDeterminism) {
  const LevyParams p = params(0, 0.3, 20, 0.5);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const LevyPath a = sample_levy_path(p, 2.0, 37, s);
    EXPECT_EQ(a.n_steps(), 37u);
    EXPECT_EQ(a.jump_times.size(), a.jump_amps.size());
    EXPECT_TRUE(std::is_sorted(a.jump_times.begin(), a.jump_times.end()));
    for (double t : a.jump_times) {
      EXPECT_GE(t, 0.0);
      EXPECT_LE(t, 2.0);
    }
    const LevyPath b = sample_levy_path(p, 2.0, 37, s);
    EXPECT_EQ(a.dW, b.dW);
    EXPECT_EQ(a.jump_times, b.jump_times);
    EXPECT_EQ(a.jump_amps, b.jump_amps);
  }
  EXPECT_THROW(sample_levy_path(p, 0.0, 10, 1), DomainError);
  EXPECT_THROW(sample_levy_path(p, 1.0, 0, 1), DomainError);
}

TEST(LevyPath, PoissonCountMean) {
  std::vector<double> counts;
  for (std::uint64_t s = 0; s < 10000; ++s)
    counts.push_back(static_cast<double>(sample_levy_path(params(0, 0, 5, 1), 1.0, 1, s).n_jumps()));
  EXPECT_NEAR(oracle::mean(counts), 5.0, 3 * std::sqrt(5.0 / 1e4));
}

TEST(LevyPath, BrownianSumVariance) {
  std::vector<double> sums;
  for (std::uint64_t s = 0; s < 10000; ++s) sums.push_back(sample_levy_path(params(0, 1, 0, 0), 1.0, 50, s).dW.sum());
  EXPECT_NEAR(oracle::variance(sums), 1.0, 0.05);
}

TEST(KernelA, Values) {
  EXPECT_EQ(kernel_A(3, 1.5, 1.5), 0.0);
  EXPECT_DOUBLE_EQ(kernel_A(1, 0.0, pi / 2), 1.0);
  EXPECT_NEAR(std::sin(2.0) / 2, 0.4546487, 1e-7);
  EXPECT_DOUBLE_EQ(kernel_A(2, 0.0, 1.0), std::sin(2.0) / 2);
  EXPECT_THROW(kernel_A(0, 0.0, 1.0), DomainError);
}

TEST(ModeValue, DeterministicForcing) {
  const LevyPath path = sample_levy_path(params(0, 0, 0, 0), 1.0, 1000, 3);
  const Eigen::VectorXd h = Eigen::VectorXd::Ones(1001);
  const double ref = oracle::forced_response(1, 1.0);
  EXPECT_NEAR(ref, 0.4596977, 1e-7);
  for (double f1 : {1.0, -2.5}) {
    EXPECT_NEAR(mode_final_value(f1, 0.7, h, path, 1, params(0, 0, 0, 0)), f1 * ref, 2e-3 * std::abs(f1));
  }
}

TEST(ModeValue, SingleJumpIsExact) {
  LevyPath path;
  path.horizon = 1.0;
  path.dW = Eigen::VectorXd::Zero(100);
  path.jump_times = {0.3};
  path.jump_amps = {0.8};
  const Eigen::VectorXd h = Eigen::VectorXd::Ones(101);
  for (int k = 1; k <= 5; ++k) {
    const double got = mode_final_value(0.0, 1.7, h, path, k, params(0, 0, 5, 0.1));
    EXPECT_NEAR(got, 1.7 * 0.8 * std::sin(k * 0.7) / k, 1e-15);
  }
}

TEST(ModeValue, ShapeMismatch) {
  const LevyPath path = sample_levy_path(params(0, 0.1, 1, 0.1), 1.0, 10, 1);
  EXPECT_THROW(mode_final_value(1, 1, Eigen::VectorXd::Ones(10), path, 1, LevyParams{}), DomainError);
}

TEST(ModeValue, ZeroMeanWithoutForcing) {
  const LevyParams p = params(0, 0.5, 0, 0);
  const Eigen::VectorXd h = Eigen::VectorXd::Ones(101);
  const ModalIntegrator integ(2, 1.0, 100, h);
  for (int k = 1; k <= 2; ++k) {
    std::vector<double> v;
    for (std::uint64_t s = 0; s < 10000; ++s) v.push_back(integ.final_value(k, 0.0, 1.0, sample_levy_path(p, 1.0, 100, s), p));
    EXPECT_LE(std::abs(oracle::mean(v)), 3 * oracle::std_error(v)) << "k=" << k;
  }
}

TEST(ModeValue, LinearInSources) {
  oracle::Gen gen(12);
  const LevyParams p = params(0.4, 0.3, 4, 0.2);
  const Eigen::VectorXd h = Eigen::VectorXd::LinSpaced(201, 0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const LevyPath path = sample_levy_path(p, 1.0, 200, static_cast<std::uint64_t>(t));
    const int k = gen.integer(1, 8);
    const double f1 = gen.normal(), f2 = gen.normal(), g1 = gen.normal(), g2 = gen.normal();
    const double a = gen.normal(), b = gen.normal();
    const double lhs = mode_final_value(a * f1 + b * f2, a * g1 + b * g2, h, path, k, p);
    const double rhs = a * mode_final_value(f1, g1, h, path, k, p) + b * mode_final_value(f2, g2, h, path, k, p);
    EXPECT_NEAR(lhs, rhs, 1e-12 * (1 + std::abs(lhs)));
  }
}

// Campbell: E Σ_m A_k(s_m)² J_m² = λ σ_J² ∫₀ᵀ A_k(s)² ds
TEST(ModeValue, JumpSumMatchesCampbell) {
  const LevyParams p = params(0, 0, 5, 0.3);
  for (int k : {1, 2, 4}) {
    std::vector<double> v;
    for (std::uint64_t s = 0; s < 10000; ++s) {
      const LevyPath path = sample_levy_path(p, 1.0, 1, s);
      double acc = 0.0;
      for (std::size_t m = 0; m < path.n_jumps(); ++m) acc += std::pow(kernel_A(k, path.jump_times[m], 1.0) * path.jump_amps[m], 2);
      v.push_back(acc);
    }
    const double ref = 5 * 0.09 * oracle::time_kernel(k, k, 1.0);
    EXPECT_NEAR(oracle::mean(v), ref, 3 * oracle::std_error(v)) << "k=" << k;
  }
}

TEST(SourcePair, ValidatesInputs) {
  const Grid space = make_uniform_grid(0.0, pi, 10);
  const Grid time = make_uniform_grid(0.0, 1.0, 5);
  const SineBasis b(pi, 3);
  const Eigen::VectorXd f = Eigen::VectorXd::Zero(11);
  EXPECT_THROW(SourcePair::build(space, time, b, f, f, -Eigen::VectorXd::Ones(6)), DomainError);
  EXPECT_THROW(SourcePair::build(space, time, b, f, f, Eigen::VectorXd::Zero(6)), DomainError);
  EXPECT_THROW(SourcePair::build(space, time, b, f, f, Eigen::VectorXd::Ones(5)), DomainError);
  EXPECT_THROW(SourcePair::build(space, time, b, Eigen::VectorXd::Zero(10), f, Eigen::VectorXd::Ones(6)), DomainError);
}

TEST(SourcePair, CoefficientsMatchProjection) {
  const SourcePair s = make_sources(sine, [](double x) { return std::exp(-std::pow(x - pi / 2, 2)); }, 6);
  const SineBasis b(pi, 6);
  EXPECT_LE((s.f_coeffs - project_all(s.f_values, s.space, b)).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LE((s.g_coeffs - project_all(s.g_values, s.space, b)).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_NEAR(s.f_coeffs[0], std::sqrt(pi / 2), 1e-12);
}

TEST(Ensemble, DeterministicRowsAreIdentical) {
  const SourcePair s = make_sources(sine, sine, 3, 40, 200);
  const Ensemble e = simulate_ensemble(s, params(0, 0, 0, 0), 1.0, 3, 20, 0.0, 5, 2);
  for (Eigen::Index n = 1; n < e.fields.rows(); ++n) EXPECT_EQ(e.fields.row(n), e.fields.row(0));
}

TEST(Ensemble, WorkerCountDoesNotChangeResults) {
  const SourcePair s = make_sources(sine, sine, 4, 50, 200);
  const Ensemble a = simulate_ensemble(s, LevyParams{}, 1.0, 4, 64, 0.003, 99, 1);
  for (unsigned w : {2u, 3u, 8u}) {
    const Ensemble b = simulate_ensemble(s, LevyParams{}, 1.0, 4, 64, 0.003, 99, w);
    ASSERT_EQ(a.fields.size(), b.fields.size());
    EXPECT_EQ(std::memcmp(a.fields.data(), b.fields.data(), sizeof(double) * static_cast<std::size_t>(a.fields.size())), 0)
        << "workers=" << w;
  }
  const Ensemble c = simulate_ensemble(s, LevyParams{}, 1.0, 4, 64, 0.003, 100, 1);
  EXPECT_NE(a.fields, c.fields);
}

TEST(Ensemble, RowMatchesModalSample) {
  const SourcePair s = make_sources(sine, sine, 3, 30, 100);
  const Ensemble e = simulate_ensemble(s, LevyParams{}, 1.0, 3, 5, 0.0, 8, 1);
  const Eigen::VectorXd u3 = ensemble_modal_sample(s, LevyParams{}, 1.0, 3, 8, 3);
  const Eigen::VectorXd row = synthesize(u3, SineBasis(pi, 3), s.space);
  EXPECT_LE((e.fields.row(3).transpose() - row).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Ensemble, ObservationNoiseLevel) {
  const SourcePair s = make_sources(sine, sine, 3, 100, 100);
  const Ensemble clean = simulate_ensemble(s, params(0, 0, 0, 0), 1.0, 3, 2, 0.0, 1, 1);
  const Ensemble e = simulate_ensemble(s, params(0, 0, 0, 0), 1.0, 3, 2000, 0.005, 1, 0);
  for (Eigen::Index i = 1; i + 1 < e.fields.cols(); ++i) {
    std::vector<double> d;
    for (Eigen::Index n = 0; n < e.fields.rows(); ++n) d.push_back(e.fields(n, i) - clean.fields(0, i));
    const double sd = std::sqrt(oracle::variance(d));
    EXPECT_NEAR(sd, 0.005, 0.0005) << "i=" << i;
  }
}

TEST(Ensemble, InputErrors) {
  const SourcePair s = make_sources(sine, sine, 3, 20, 20);
  EXPECT_THROW(simulate_ensemble(s, LevyParams{}, 2.0, 3, 10, 0.0, 1), DomainError);
  EXPECT_THROW(simulate_ensemble(s, LevyParams{}, 1.0, 4, 10, 0.0, 1), DomainError);
  EXPECT_THROW(simulate_ensemble(s, LevyParams{}, 1.0, 3, 0, 0.0, 1), DomainError);
  EXPECT_THROW(simulate_ensemble(s, LevyParams{}, 1.0, 3, 10, -1.0, 1), DomainError);
}

TEST(Statistics, DeterministicEnsembleHasZeroCovariance) {
  const SourcePair s = make_sources(sine, sine, 4, 60, 100);
  const Ensemble e = simulate_ensemble(s, params(0, 0, 0, 0), 1.0, 4, 30, 0.0, 2, 1);
  const SineBasis b(pi, 4);
  const ModalStats st = ensemble_statistics(e, s.space, b, 4);
  EXPECT_TRUE(st.cov.isZero(0.0));
  const Eigen::VectorXd row = e.fields.row(0).transpose();
  EXPECT_EQ(st.mean, project_all(row, s.space, b));
  EXPECT_EQ(st.n_samples, 30);
}

TEST(Statistics, PureNoiseCovariance) {
  const double se = 0.01;
  const SourcePair s = make_sources(zero, zero, 4, 100, 10);
  const int n = 4000;
  const Ensemble e = simulate_ensemble(s, params(0, 0, 0, 0), 1.0, 4, n, se, 3, 0);
  const ModalStats st = ensemble_statistics(e, s.space, SineBasis(pi, 4), 4);
  const double dx = s.space.spacing();
  const double target = se * se * dx;
  for (int k = 0; k < 4; ++k) {
    for (int l = 0; l < 4; ++l) {
      const double sd = k == l ? target * std::sqrt(2.0 / (n - 1)) : target / std::sqrt(double(n));
      EXPECT_NEAR(st.cov(k, l), k == l ? target : 0.0, 3 * sd) << k << "," << l;
    }
  }
}

TEST(Statistics, SymmetricNonNegativeAndOrderInsensitive) {
  const SourcePair s = make_sources(sine, [](double x) { return x * (pi - x); }, 5, 60, 100);
  const Ensemble e = simulate_ensemble(s, LevyParams{}, 1.0, 5, 300, 0.002, 4, 0);
  const SineBasis b(pi, 5);
  const ModalStats st = ensemble_statistics(e, s.space, b, 5);
  EXPECT_EQ(st.cov, st.cov.transpose());
  EXPECT_GE(st.cov.diagonal().minCoeff(), 0.0);

  Ensemble shuffled = e;
  std::vector<Eigen::Index> order(300);
  for (Eigen::Index i = 0; i < 300; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), oracle::Gen(1).eng);
  for (Eigen::Index i = 0; i < 300; ++i) shuffled.fields.row(i) = e.fields.row(order[static_cast<std::size_t>(i)]);
  const ModalStats st2 = ensemble_statistics(shuffled, s.space, b, 5);
  EXPECT_LE((st.mean - st2.mean).cwiseAbs().maxCoeff(), 1e-12 * st.mean.cwiseAbs().maxCoeff());
  EXPECT_LE((st.cov - st2.cov).cwiseAbs().maxCoeff(), 1e-10 * st.cov.cwiseAbs().maxCoeff());
}

TEST(Statistics, Errors) {
  const SourcePair s = make_sources(sine, sine, 3, 20, 20);
  const Ensemble one = simulate_ensemble(s, LevyParams{}, 1.0, 3, 1, 0.0, 1);
  EXPECT_THROW(ensemble_statistics(one, s.space, SineBasis(pi, 3), 3), DomainError);
  const Ensemble two = simulate_ensemble(s, LevyParams{}, 1.0, 3, 2, 0.0, 1);
  EXPECT_THROW(ensemble_statistics(two, s.space, SineBasis(pi, 3), 4), DomainError);
  EXPECT_THROW(ensemble_statistics(two, make_uniform_grid(0, pi, 10), SineBasis(pi, 3), 3), DomainError);
}

TEST(Energy, ZeroSources) {
  const SourcePair s = make_sources(zero, zero, 3, 50, 100);
  const EnergyCheck c = energy_bound_check(s, LevyParams{}, 1.0, 100, 1);
  EXPECT_EQ(c.estimate, 0.0);
  EXPECT_EQ(c.bound, 0.0);
}

TEST(Energy, ForcingOnlyBound) {
  const SourcePair s = make_sources(sine, zero, 5, 100, 1000);
  const double norm2 = oracle::simpson([](double x) { return std::sin(x) * std::sin(x); }, 0, pi, 1000);
  const double ref = (2.0 / 3.0) * norm2;
  EXPECT_NEAR(ref, 1.0472, 1e-4);
  const EnergyCheck c = energy_bound_check(s, params(0, 0.1, 5, 0.1), 1.0, 100, 3);
  EXPECT_NEAR(c.bound, ref, 1e-12);
  EXPECT_LE(c.estimate, c.bound);
  EXPECT_THROW(energy_bound_check(s, LevyParams{}, 1.0, 50, 3), DomainError);
}

TEST(Energy, RandomConfigurationsRespectBound) {
  oracle::Gen gen(77);
  for (int t = 0; t < 5; ++t) {
    const double a = gen.uniform(-2, 2), c = gen.uniform(-2, 2), T = gen.uniform(0.3, 2.0);
    const SourcePair s = make_sources([&](double x) { return a * std::sin(x) + std::sin(2 * x); },
                                      [&](double x) { return c * std::sin(3 * x) + x * (pi - x) / 3; }, 6, 80, 400, T);
    const LevyParams p = params(gen.uniform(-1, 1), gen.uniform(0, 1), gen.uniform(0, 10), gen.uniform(0, 1));
    const EnergyCheck e = energy_bound_check(s, p, T, 500, static_cast<std::uint64_t>(t));
    EXPECT_LE(e.estimate, e.bound + 3 * e.std_error) << "trial " << t;
  }
}
