#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include "oracles.hpp"
#include "swinv/errors.hpp"
#include "swinv/helmholtz_forward.hpp"
#include "swinv/tikhonov.hpp"

using namespace swinv;
using oracle::pi;

namespace {

StrengthField constant_mu(double c, std::size_t n) {
  return StrengthField::sample(make_uniform_grid(0.0, 1.0, n), [c](double) { return c; });
}

std::vector<WavefieldSample> draw(const StrengthField& mu, double nu, const Eigen::VectorXd& x, int n) {
  WavefieldSampler s(mu, nu, x);
  std::vector<WavefieldSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(s.sample(static_cast<std::uint64_t>(1000 + i)));
  return out;
}

}  // namespace

TEST(Kernel, ScalarValues) {
  EXPECT_EQ(kernel(1.7, 0.3, 0.3), 1.0);
  EXPECT_EQ(kernel(0.2, -1.0, -1.0), 1.0);
  EXPECT_NEAR(kernel(pi / 8, 0.0, 2.0), 0.0, 1e-30);
  const double c2 = std::cos(2.0) * std::cos(2.0);
  EXPECT_NEAR(c2, 0.1731781, 1e-7);
  EXPECT_DOUBLE_EQ(kernel(1.0, 0.0, 1.0), c2);
}

TEST(Kernel, AlternateVariants) {
  EXPECT_DOUBLE_EQ(kernel(1.0, 0.0, 1.0, KernelVariant::h1), std::pow(std::cos(1.0), 2));
  EXPECT_DOUBLE_EQ(kernel(1.0, 0.0, 1.0, KernelVariant::h2), std::cos(2.0));
}

TEST(Kernel, SymmetryDecompositionAndBounds) {
  oracle::Gen gen(11);
  for (int t = 0; t < 2000; ++t) {
    const double nu = gen.uniform(0.01, 20.0);
    const double x = gen.uniform(-3.0, 3.0), y = gen.uniform(-3.0, 3.0);
    const double k = kernel(nu, x, y);
    EXPECT_EQ(k, kernel(nu, y, x));
    EXPECT_NEAR(k, 0.5 + 0.5 * std::cos(4.0 * nu * std::abs(x - y)), 1e-14);
    EXPECT_GE(k, 0.0);
    EXPECT_LE(k, 1.0);
  }
}

TEST(ApplyForward, ConstantStrengthAnalyticIntegral) {
  const StrengthField mu = constant_mu(1.0, 200);
  // ∫₀¹ cos²(πy/2) dy = ½ + ½∫₀¹cos(πy) dy
  const double ref = 0.5 + 0.5 * oracle::simpson([](double y) { return std::cos(pi * y); }, 0, 1, 1000);
  EXPECT_NEAR(ref, 0.5, 1e-12);
  const Eigen::VectorXd out = apply_forward(mu, pi / 4, Eigen::VectorXd::Zero(1));
  EXPECT_NEAR(out[0], ref, 5e-3);
}

TEST(ApplyForward, ZeroStrength) {
  const StrengthField mu = constant_mu(0.0, 50);
  EXPECT_TRUE(apply_forward(mu, 2.0, default_observation_points(20)).isZero(0.0));
}

TEST(ApplyForward, NullSpaceWitness) {
  const Grid g = make_uniform_grid(0.0, 1.0, 10000);
  const double nu = pi / 2;
  // cos(8νy) with ν = π/2
  const StrengthField mu(g, [&] {
    Eigen::VectorXd v(10000);
    for (int j = 0; j < 10000; ++j) v[j] = std::cos(8.0 * nu * g[static_cast<std::size_t>(j)]);
    return v;
  }());
  const Eigen::VectorXd x = (Eigen::VectorXd(6) << -1.2, -0.7, -0.2, 1.2, 1.7, 2.2).finished();
  const Eigen::VectorXd out = apply_forward(mu, nu, x);
  for (Eigen::Index i = 0; i < x.size(); ++i) EXPECT_NEAR(out[i], 0.0, 1e-6);
  EXPECT_LE(out.cwiseAbs().maxCoeff() / mu.values().cwiseAbs().maxCoeff(), 1e-4);
}

TEST(ApplyForward, PositivityForNonNegativeStrength) {
  oracle::Gen gen(3);
  const Grid g = make_uniform_grid(0.0, 1.0, 80);
  for (int t = 0; t < 50; ++t) {
    Eigen::VectorXd v(80);
    for (int j = 0; j < 80; ++j) v[j] = gen.uniform(0.0, 1.0) * (gen.uniform(0, 1) < 0.3 ? 0.0 : 1.0);
    const StrengthField mu = StrengthField::make_true(g, v);
    const Eigen::VectorXd out = apply_forward(mu, gen.uniform(0.1, 10.0), default_observation_points(40));
    EXPECT_GE(out.minCoeff(), 0.0);
  }
}

TEST(StrengthField, Validation) {
  const Grid g = make_uniform_grid(0.0, 1.0, 4);
  EXPECT_THROW(StrengthField(g, Eigen::VectorXd::Ones(5)), DomainError);
  EXPECT_THROW(StrengthField(g, Eigen::VectorXd::Constant(4, NAN)), DomainError);
  EXPECT_THROW(StrengthField::make_true(g, -Eigen::VectorXd::Ones(4)), DomainError);
  EXPECT_TRUE(StrengthField(g, -Eigen::VectorXd::Ones(4)).has_negative());
}

TEST(FrequencySet, Validation) {
  EXPECT_EQ(FrequencySet({1, 2, 3}).size(), 3u);
  EXPECT_THROW(FrequencySet({}), DomainError);
  EXPECT_THROW(FrequencySet({0.0, 1.0}), DomainError);
  EXPECT_THROW(FrequencySet({2.0, 1.0}), DomainError);
}

TEST(ObservationLayout, TwoBlocksOutsideSupport) {
  const Eigen::VectorXd x = default_observation_points(200);
  ASSERT_EQ(x.size(), 200);
  for (Eigen::Index i = 0; i < 100; ++i) {
    EXPECT_GE(x[i], -1.2);
    EXPECT_LE(x[i], -0.2);
    EXPECT_GE(x[100 + i], 1.2);
    EXPECT_LE(x[100 + i], 2.2);
  }
  EXPECT_EQ(x[0], -1.2);
  EXPECT_EQ(x[199], 2.2);
  EXPECT_THROW(default_observation_points(2), DomainError);
}

TEST(AssembleMatrix, RowSumsMatchForwardModel) {
  const Grid g = make_uniform_grid(0.0, 1.0, 200);
  const Eigen::VectorXd x = default_observation_points(200);
  for (double nu : {1.0, 2.5, 7.0}) {
    const Eigen::MatrixXd a = assemble_matrix(nu, x, g);
    const Eigen::VectorXd direct = apply_forward(constant_mu(1.0, 200), nu, x);
    EXPECT_LE((a.rowwise().sum() - direct).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_GE(a.minCoeff(), 0.0);
    EXPECT_LE(a.maxCoeff(), g.spacing());
  }
}

TEST(AssembleMatrix, LinearInStrength) {
  oracle::Gen gen(5);
  const Grid g = make_uniform_grid(0.0, 1.0, 60);
  const Eigen::VectorXd x = default_observation_points(30);
  const Eigen::VectorXd v = gen.vector(60);
  const Eigen::VectorXd lhs = assemble_matrix(3.0, x, g) * v;
  const Eigen::VectorXd rhs = apply_forward(StrengthField(g, v), 3.0, x);
  EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(AssembleMatrix, SymmetricOnSourceGrid) {
  const Grid g = make_uniform_grid(0.0, 1.0, 50);
  const Eigen::MatrixXd a = assemble_matrix(2.0, g.left_nodes(), g);
  EXPECT_LE((a - a.transpose()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(AssembleMatrix, SingularValuesDecay) {
  const Grid g = make_uniform_grid(0.0, 1.0, 200);
  const Eigen::MatrixXd a = assemble_matrix(1.0, default_observation_points(200), g);
  const Eigen::VectorXd s = Eigen::JacobiSVD<Eigen::MatrixXd>(a).singularValues();
  EXPECT_LE(s[19] / s[0], 1e-6);
}

TEST(SynthObservations, NoiseFreeEqualsModel) {
  const StrengthField mu = StrengthField::sample(make_uniform_grid(0, 1, 100),
                                                 [](double y) { return 0.5 * (1 - std::cos(2 * pi * y)); });
  const Eigen::VectorXd x = default_observation_points(40);
  const ObservationSet obs = synth_observations(mu, FrequencySet({1, 2}), x, 0.0, 9);
  EXPECT_EQ(obs.data.col(0), apply_forward(mu, 1.0, x));
  EXPECT_EQ(obs.data.col(1), apply_forward(mu, 2.0, x));
}

TEST(SynthObservations, NoiseStatisticsAndDeterminism) {
  const StrengthField mu = constant_mu(1.0, 50);
  const Eigen::VectorXd x = default_observation_points(1000);
  const FrequencySet fs({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  const ObservationSet obs = synth_observations(mu, fs, x, 0.01, 42);
  std::vector<double> resid;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    const Eigen::VectorXd model = apply_forward(mu, fs[k], x);
    for (Eigen::Index i = 0; i < x.size(); ++i) resid.push_back(obs.data(i, static_cast<Eigen::Index>(k)) - model[i]);
  }
  ASSERT_EQ(resid.size(), 10000u);
  const double sd = std::sqrt(oracle::variance(resid));
  EXPECT_GE(sd, 0.0097);
  EXPECT_LE(sd, 0.0103);

  const ObservationSet again = synth_observations(mu, fs, x, 0.01, 42);
  EXPECT_EQ(std::memcmp(obs.data.data(), again.data.data(), sizeof(double) * 10000), 0);
  const ObservationSet other = synth_observations(mu, fs, x, 0.01, 43);
  EXPECT_NE(obs.data, other.data);
  EXPECT_THROW(synth_observations(mu, fs, x, -1.0, 1), DomainError);
}

TEST(Wavefield, ZeroStrengthGivesZero) {
  const WavefieldSample s = sample_wavefield(constant_mu(0.0, 100), 1.0, default_observation_points(10), 5);
  for (Eigen::Index i = 0; i < s.values.size(); ++i) {
    EXPECT_EQ(s.values[i].real(), 0.0);
    EXPECT_EQ(s.values[i].imag(), 0.0);
  }
}

TEST(Wavefield, RejectsNegativeStrength) {
  const StrengthField mu(make_uniform_grid(0, 1, 4), (Eigen::VectorXd(4) << 1, -1, 1, 1).finished());
  EXPECT_THROW(sample_wavefield(mu, 1.0, default_observation_points(4), 1), DomainError);
}

TEST(Wavefield, TranslationInvariance) {
  const double shift = 0.37;
  auto profile = [](double y) { return 1.0 + std::sin(3.0 * y); };
  const StrengthField mu = StrengthField::sample(make_uniform_grid(0.0, 1.0, 128), profile);
  const StrengthField moved =
      StrengthField::sample(make_uniform_grid(shift, 1.0 + shift, 128), [&](double y) { return profile(y - shift); });
  const Eigen::VectorXd x = default_observation_points(12);
  const Eigen::VectorXd xs = x.array() + shift;
  const WavefieldSample a = sample_wavefield(mu, 2.0, x, 77);
  const WavefieldSample b = sample_wavefield(moved, 2.0, xs, 77);
  for (Eigen::Index i = 0; i < x.size(); ++i) EXPECT_NEAR(std::abs(a.values[i]), std::abs(b.values[i]), 1e-12);
}

TEST(Wavefield, ZeroMeanAcrossSeeds) {
  const Eigen::VectorXd x = default_observation_points(4);
  const auto samples = draw(constant_mu(1.0, 100), 1.0, x, 10000);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    std::vector<double> re, im;
    for (const auto& s : samples) {
      re.push_back(s.values[i].real());
      im.push_back(s.values[i].imag());
    }
    EXPECT_LE(std::abs(oracle::mean(re)), 3 * oracle::std_error(re));
    EXPECT_LE(std::abs(oracle::mean(im)), 3 * oracle::std_error(im));
  }
}

TEST(SecondMoment, IsometryForConstantStrength) {
  const Eigen::VectorXd x = default_observation_points(6);
  for (double nu : {1.0, 2.0}) {
    const StrengthField mu = constant_mu(1.0, 100);
    const auto samples = draw(mu, nu, x, 10000);
    const Eigen::VectorXd m = empirical_second_moment(samples);
    const Eigen::VectorXd se = second_moment_standard_error(samples);
    const double target = 1.0 / (4.0 * nu * nu);
    EXPECT_NEAR(second_moment_identity(mu, nu), target, 1e-12);
    for (Eigen::Index i = 0; i < x.size(); ++i) EXPECT_NEAR(m[i], target, 3 * se[i]) << "nu=" << nu;
    // the right side has no x dependence
    EXPECT_LE(m.maxCoeff() - m.minCoeff(), 6 * se.maxCoeff());
  }
}

TEST(SecondMoment, ZeroStrengthIsExactlyZero) {
  const auto samples = draw(constant_mu(0.0, 20), 1.0, default_observation_points(4), 10);
  EXPECT_TRUE(empirical_second_moment(samples).isZero(0.0));
}

TEST(SecondMoment, Errors) {
  EXPECT_THROW(empirical_second_moment({}), DomainError);
  auto a = draw(constant_mu(1.0, 20), 1.0, default_observation_points(4), 1);
  a.push_back(draw(constant_mu(1.0, 20), 2.0, default_observation_points(4), 1).front());
  EXPECT_THROW(empirical_second_moment(a), DomainError);
}

// property: more frequencies never make the smallest singular value worse.
// Three cells keep every block full rank, so the comparison is not round-off.
TEST(Conditioning, StackingImprovesSmallestSingularValue) {
  const Grid g = make_uniform_grid(0.0, 1.0, 3);
  const Eigen::VectorXd x = default_observation_points(60);
  std::vector<Eigen::MatrixXd> blocks;
  std::vector<Eigen::VectorXd> data;
  double best = 0.0;
  for (int nu = 1; nu <= 5; ++nu) {
    blocks.push_back(assemble_matrix(nu, x, g));
    data.push_back(Eigen::VectorXd::Zero(60));
    best = std::max(best, compute_svd(blocks.back()).sigma.minCoeff());
  }
  const StackedSystem sys = stack_frequencies(blocks, data);
  EXPECT_GE(compute_svd(sys.design.stacked).sigma.minCoeff(), best * (1 - 1e-10));
}
