#include "swinv/helmholtz_forward.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swinv/errors.hpp"
#include "swinv/random.hpp"

namespace swinv {

double kernel(double nu, double x, double y, KernelVariant variant) {
  const double r = std::abs(x - y);
  switch (variant) {
    case KernelVariant::h1: {
      const double c = std::cos(nu * r);
      return c * c;
    }
    case KernelVariant::h2:
      return std::cos(2.0 * nu * r);
    case KernelVariant::cos2_2nu:
      break;
  }
  const double c = std::cos(2.0 * nu * r);
  return c * c;
}

StrengthField::StrengthField(Grid grid, Eigen::VectorXd values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (static_cast<std::size_t>(values_.size()) != grid_.cells()) {
    throw DomainError("strength field: expected " + std::to_string(grid_.cells()) +
                      " samples, got " + std::to_string(values_.size()));
  }
  if (!values_.allFinite()) throw DomainError("strength field: non-finite sample");
}

StrengthField StrengthField::make_true(Grid grid, Eigen::VectorXd values) {
  StrengthField field(std::move(grid), std::move(values));
  if (field.has_negative()) {
    throw DomainError("strength field: true strength must be non-negative (min " +
                      std::to_string(field.values().minCoeff()) + ")");
  }
  return field;
}

StrengthField StrengthField::sample(Grid grid, const std::function<double(double)>& mu) {
  Eigen::VectorXd values(static_cast<Eigen::Index>(grid.cells()));
  for (Eigen::Index j = 0; j < values.size(); ++j) values[j] = mu(grid[static_cast<std::size_t>(j)]);
  return StrengthField(std::move(grid), std::move(values));
}

FrequencySet::FrequencySet(std::vector<double> freqs) : freqs_(std::move(freqs)) {
  if (freqs_.empty()) throw DomainError("frequency set: empty");
  for (std::size_t k = 0; k < freqs_.size(); ++k) {
    if (!(freqs_[k] > 0.0) || !std::isfinite(freqs_[k])) {
      throw DomainError("frequency set: nu[" + std::to_string(k) + "] must be positive");
    }
    if (k > 0 && !(freqs_[k] > freqs_[k - 1])) {
      throw DomainError("frequency set: frequencies must be strictly increasing");
    }
  }
}

Eigen::VectorXd default_observation_points(int m) {
  if (m < 4) throw DomainError("observation layout: need at least 4 points");
  const int left = m / 2;
  const int right = m - left;
  Eigen::VectorXd pts(m);
  pts.head(left) = Eigen::VectorXd::LinSpaced(left, -1.2, -0.2);
  pts.tail(right) = Eigen::VectorXd::LinSpaced(right, 1.2, 2.2);
  return pts;
}

Eigen::MatrixXd assemble_matrix(double nu, const Eigen::Ref<const Eigen::VectorXd>& obs_points,
                                const Grid& source_grid, KernelVariant variant) {
  if (!(nu > 0.0)) throw DomainError("assemble_matrix: frequency must be positive");
  const auto n = static_cast<Eigen::Index>(source_grid.cells());
  const double dy = source_grid.spacing();
  Eigen::MatrixXd a(obs_points.size(), n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double y = source_grid[static_cast<std::size_t>(j)];
    for (Eigen::Index i = 0; i < obs_points.size(); ++i) {
      a(i, j) = dy * kernel(nu, obs_points[i], y, variant);
    }
  }
  return a;
}

Eigen::VectorXd apply_forward(const StrengthField& mu, double nu,
                              const Eigen::Ref<const Eigen::VectorXd>& obs_points,
                              KernelVariant variant) {
  return assemble_matrix(nu, obs_points, mu.grid(), variant) * mu.values();
}

ObservationSet synth_observations(const StrengthField& mu_true, const FrequencySet& freqs,
                                  const Eigen::Ref<const Eigen::VectorXd>& obs_points,
                                  double noise_level, std::uint64_t seed, KernelVariant variant) {
  if (!(noise_level >= 0.0)) throw DomainError("synth_observations: noise level must be >= 0");
  ObservationSet obs{obs_points, freqs,
                     Eigen::MatrixXd(obs_points.size(), static_cast<Eigen::Index>(freqs.size())),
                     noise_level};
  for (std::size_t k = 0; k < freqs.size(); ++k) {
    obs.data.col(static_cast<Eigen::Index>(k)) = apply_forward(mu_true, freqs[k], obs_points, variant);
  }
  if (noise_level > 0.0) {
    Rng rng(seed);
    // Column-major draw order: frequency by frequency, point by point.
    for (Eigen::Index k = 0; k < obs.data.cols(); ++k) {
      for (Eigen::Index i = 0; i < obs.data.rows(); ++i) obs.data(i, k) += rng.normal(0.0, noise_level);
    }
  }
  return obs;
}

WavefieldSampler::WavefieldSampler(const StrengthField& mu, double nu, Eigen::VectorXd obs_points)
    : obs_points_(std::move(obs_points)), nu_(nu), dy_(mu.grid().spacing()) {
  if (!(nu > 0.0)) throw DomainError("wavefield: frequency must be positive");
  if (mu.has_negative()) throw DomainError("wavefield: strength must be non-negative");
  const Eigen::VectorXd y = mu.nodes();
  const std::complex<double> scale = 1.0 / std::complex<double>(0.0, 2.0 * nu);
  propagator_.resize(obs_points_.size(), y.size());
  for (Eigen::Index j = 0; j < y.size(); ++j) {
    const double amp = std::sqrt(mu.values()[j]);
    for (Eigen::Index i = 0; i < obs_points_.size(); ++i) {
      propagator_(i, j) = scale * std::polar(amp, nu * std::abs(obs_points_[i] - y[j]));
    }
  }
}

WavefieldSample WavefieldSampler::sample(std::uint64_t seed) const {
  Rng rng(seed);
  Eigen::VectorXd dw(propagator_.cols());
  const double sd = std::sqrt(dy_);
  for (Eigen::Index j = 0; j < dw.size(); ++j) dw[j] = rng.normal(0.0, sd);
  return WavefieldSample{obs_points_, propagator_ * dw.cast<std::complex<double>>(), nu_, seed};
}

WavefieldSample sample_wavefield(const StrengthField& mu, double nu,
                                 const Eigen::Ref<const Eigen::VectorXd>& obs_points,
                                 std::uint64_t seed) {
  return WavefieldSampler(mu, nu, obs_points).sample(seed);
}

namespace {

void check_samples(const std::vector<WavefieldSample>& samples) {
  if (samples.empty()) throw DomainError("second moment: no samples");
  const auto& first = samples.front();
  for (const auto& s : samples) {
    if (s.freq != first.freq || s.obs_points.size() != first.obs_points.size() ||
        s.values.size() != first.obs_points.size() || s.obs_points != first.obs_points) {
      throw DomainError("second moment: samples disagree on frequency or observation points");
    }
  }
}

}  // namespace

Eigen::VectorXd empirical_second_moment(const std::vector<WavefieldSample>& samples) {
  check_samples(samples);
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(samples.front().values.size());
  for (const auto& s : samples) acc += s.values.cwiseAbs2();
  return acc / static_cast<double>(samples.size());
}

Eigen::VectorXd second_moment_standard_error(const std::vector<WavefieldSample>& samples) {
  const Eigen::VectorXd mean = empirical_second_moment(samples);
  const auto n = static_cast<double>(samples.size());
  if (samples.size() < 2) return Eigen::VectorXd::Zero(mean.size());
  Eigen::VectorXd ss = Eigen::VectorXd::Zero(mean.size());
  for (const auto& s : samples) ss += (s.values.cwiseAbs2() - mean).cwiseAbs2();
  return (ss / (n - 1.0)).cwiseSqrt() / std::sqrt(n);
}

double second_moment_identity(const StrengthField& mu, double nu) {
  return mu.values().sum() * mu.grid().spacing() / (4.0 * nu * nu);
}

}  // namespace swinv
