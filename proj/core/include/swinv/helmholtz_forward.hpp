#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "swinv/grid_basis.hpp"

namespace swinv {

/// Kernel weighting the strength in the second-moment characteristic
/// functions. cos2_2nu is the operator used for inversion; h1 and h2 are the
/// alternative characteristic functions E|Re(2iνu)|² and
/// E|Re(2iνu)|² - E|Im(2iνu)|².
enum class KernelVariant { cos2_2nu, h1, h2 };

/// cos²(2ν|x-y|) for the default variant, cos²(ν|x-y|) for h1, cos(2ν|x-y|) for h2.
double kernel(double nu, double x, double y, KernelVariant variant = KernelVariant::cos2_2nu);

/// Strength mu sampled at the left nodes y_0..y_{n-1} of a grid over [0, 1].
/// Negative samples are allowed (reconstructions can undershoot) and reported
/// by has_negative(); make_true() rejects them.
class StrengthField {
 public:
  StrengthField(Grid grid, Eigen::VectorXd values);

  /// Non-negative truth; throws DomainError on any negative sample.
  static StrengthField make_true(Grid grid, Eigen::VectorXd values);
  static StrengthField sample(Grid grid, const std::function<double(double)>& mu);

  const Grid& grid() const noexcept { return grid_; }
  const Eigen::VectorXd& values() const noexcept { return values_; }
  Eigen::VectorXd nodes() const { return grid_.left_nodes(); }
  bool has_negative() const noexcept { return values_.size() > 0 && values_.minCoeff() < 0.0; }

 private:
  Grid grid_;
  Eigen::VectorXd values_;
};

/// Positive, strictly increasing frequencies.
class FrequencySet {
 public:
  explicit FrequencySet(std::vector<double> freqs);

  const std::vector<double>& values() const noexcept { return freqs_; }
  std::size_t size() const noexcept { return freqs_.size(); }
  double operator[](std::size_t k) const { return freqs_[k]; }

 private:
  std::vector<double> freqs_;
};

struct ObservationSet {
  Eigen::VectorXd obs_points;
  FrequencySet freqs;
  Eigen::MatrixXd data;  ///< data(i, k) = H_obs(x_i, nu_k)
  double noise_level = 0.0;
};

/// M points split evenly between [-1.2, -0.2] and [1.2, 2.2] (both ends
/// included in each block). M must be >= 4.
Eigen::VectorXd default_observation_points(int m);

/// Rectangle-rule T_nu mu at each observation point.
Eigen::VectorXd apply_forward(const StrengthField& mu, double nu,
                              const Eigen::Ref<const Eigen::VectorXd>& obs_points,
                              KernelVariant variant = KernelVariant::cos2_2nu);

/// A(i, j) = dy * K(nu, x_i, y_j); apply_forward(mu) == A * mu.values().
Eigen::MatrixXd assemble_matrix(double nu, const Eigen::Ref<const Eigen::VectorXd>& obs_points,
                                const Grid& source_grid,
                                KernelVariant variant = KernelVariant::cos2_2nu);

/// Forward data for every frequency plus i.i.d. N(0, noise_level²) noise.
/// Deterministic in `seed`. To avoid an inverse crime, pass a truth sampled on
/// a finer grid than the one used for inversion.
ObservationSet synth_observations(const StrengthField& mu_true, const FrequencySet& freqs,
                                  const Eigen::Ref<const Eigen::VectorXd>& obs_points,
                                  double noise_level, std::uint64_t seed,
                                  KernelVariant variant = KernelVariant::cos2_2nu);

struct WavefieldSample {
  Eigen::VectorXd obs_points;
  Eigen::VectorXcd values;
  double freq = 0.0;
  std::uint64_t seed = 0;
};

/// Discrete Itô integral
///   u(x_i) = 1/(2iν) sum_j exp(iν|x_i - y_j|) sqrt(mu_j) dW_j,  dW_j ~ N(0, dy).
/// Holds the precomputed propagator so ensembles avoid recomputing it.
class WavefieldSampler {
 public:
  WavefieldSampler(const StrengthField& mu, double nu, Eigen::VectorXd obs_points);

  WavefieldSample sample(std::uint64_t seed) const;

 private:
  Eigen::MatrixXcd propagator_;  // (i, j): exp(iν|x_i-y_j|) sqrt(mu_j) / (2iν)
  Eigen::VectorXd obs_points_;
  double nu_;
  double dy_;
};

WavefieldSample sample_wavefield(const StrengthField& mu, double nu,
                                 const Eigen::Ref<const Eigen::VectorXd>& obs_points,
                                 std::uint64_t seed);

/// Per-point mean of |u(x_i)|² over the samples.
Eigen::VectorXd empirical_second_moment(const std::vector<WavefieldSample>& samples);

/// Standard error of empirical_second_moment (sample std of |u|² / sqrt(n)).
Eigen::VectorXd second_moment_standard_error(const std::vector<WavefieldSample>& samples);

/// Closed form (1/(4ν²)) ∫ mu, with the integral by the same rectangle rule.
double second_moment_identity(const StrengthField& mu, double nu);

}  // namespace swinv
