#include "swinv/levy_forward.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "swinv/errors.hpp"
#include "swinv/random.hpp"

namespace swinv {

void LevyParams::validate() const {
  if (!std::isfinite(drift)) throw DomainError("levy params: drift must be finite");
  if (!(volatility >= 0.0)) throw DomainError("levy params: sigma must be >= 0");
  if (!(jump_rate >= 0.0)) throw DomainError("levy params: lambda_p must be >= 0");
  if (!(jump_std >= 0.0)) throw DomainError("levy params: sigma_J must be >= 0");
}

LevyPath sample_levy_path(const LevyParams& params, double horizon, int n_steps, std::uint64_t seed) {
  params.validate();
  if (!(horizon > 0.0)) throw DomainError("levy path: horizon must be positive");
  if (n_steps < 1) throw DomainError("levy path: need at least one time step");

  Rng rng(seed);
  LevyPath path;
  path.horizon = horizon;
  path.dW.resize(n_steps);
  const double sd = std::sqrt(horizon / n_steps);
  for (int j = 0; j < n_steps; ++j) path.dW[j] = rng.normal(0.0, sd);

  const std::uint64_t n_jumps = rng.poisson(params.jump_rate * horizon);
  path.jump_times.resize(n_jumps);
  for (auto& s : path.jump_times) s = rng.uniform(0.0, horizon);
  std::sort(path.jump_times.begin(), path.jump_times.end());
  path.jump_amps.resize(n_jumps);
  for (auto& amp : path.jump_amps) amp = rng.normal(0.0, params.jump_std);
  return path;
}

double kernel_A(int k, double t, double horizon) {
  if (k < 1) throw DomainError("kernel_A: mode must be >= 1");
  return std::sin(k * (horizon - t)) / k;
}

SourcePair SourcePair::build(Grid space, Grid time, const SineBasis& basis, Eigen::VectorXd f_values,
                             Eigen::VectorXd g_values, Eigen::VectorXd h_values) {
  if (static_cast<std::size_t>(f_values.size()) != space.size() ||
      static_cast<std::size_t>(g_values.size()) != space.size()) {
    throw DomainError("sources: f and g must be sampled on every spatial node");
  }
  if (static_cast<std::size_t>(h_values.size()) != time.size()) {
    throw DomainError("sources: h must be sampled on every time node");
  }
  if (h_values.minCoeff() < 0.0) throw DomainError("sources: h must be non-negative");
  if (!(h_values.maxCoeff() > 0.0)) throw DomainError("sources: h must be positive somewhere");
  Eigen::VectorXd f_coeffs = project_all(f_values, space, basis);
  Eigen::VectorXd g_coeffs = project_all(g_values, space, basis);
  return SourcePair{std::move(space),    std::move(time),     std::move(f_values), std::move(g_values),
                    std::move(h_values), std::move(f_coeffs), std::move(g_coeffs)};
}

ModalIntegrator::ModalIntegrator(int modes, double horizon, int n_steps,
                                 const Eigen::Ref<const Eigen::VectorXd>& h)
    : table_(modes, n_steps + 1), forced_(modes), drift_(modes), horizon_(horizon) {
  if (modes < 1) throw DomainError("modal integrator: need at least one mode");
  if (n_steps < 1) throw DomainError("modal integrator: need at least one time step");
  if (!(horizon > 0.0)) throw DomainError("modal integrator: horizon must be positive");
  if (h.size() != n_steps + 1) {
    throw DomainError("modal integrator: h has " + std::to_string(h.size()) + " samples for " +
                      std::to_string(n_steps + 1) + " time nodes");
  }
  const double dt = horizon / n_steps;
  for (int k = 1; k <= modes; ++k) {
    double forced = 0.0;
    double drift = 0.0;
    for (int j = 0; j <= n_steps; ++j) {
      const double a = kernel_A(k, j * dt, horizon);
      table_(k - 1, j) = a;
      if (j < n_steps) {
        forced += h[j] * a * dt;
        drift += a * dt;
      }
    }
    forced_[k - 1] = forced;
    drift_[k - 1] = drift;
  }
}

double ModalIntegrator::final_value(int k, double f_k, double g_k, const LevyPath& path,
                                    const LevyParams& params) const {
  if (k < 1 || k > modes()) throw DomainError("modal integrator: mode out of range");
  if (path.n_steps() != static_cast<std::size_t>(n_steps())) {
    throw DomainError("modal integrator: path has " + std::to_string(path.n_steps()) +
                      " steps, time grid has " + std::to_string(n_steps()));
  }
  double deterministic = f_k * forced_[k - 1] + params.drift * g_k * drift_[k - 1];

  double brownian = 0.0;
  const auto row = table_.row(k - 1);
  for (Eigen::Index j = 1; j <= path.dW.size(); ++j) brownian += row[j - 1] * path.dW[j - 1];

  double jumps = 0.0;
  for (std::size_t m = 0; m < path.n_jumps(); ++m) {
    jumps += kernel_A(k, path.jump_times[m], horizon_) * path.jump_amps[m];
  }
  return deterministic + params.volatility * g_k * brownian + g_k * jumps;
}

double mode_final_value(double f_k, double g_k, const Eigen::Ref<const Eigen::VectorXd>& h,
                        const LevyPath& path, int k, const LevyParams& params) {
  const auto n_steps = static_cast<int>(path.n_steps());
  if (h.size() != n_steps + 1) {
    throw DomainError("mode_final_value: h has " + std::to_string(h.size()) +
                      " samples, path needs " + std::to_string(n_steps + 1));
  }
  return ModalIntegrator(k, path.horizon, n_steps, h).final_value(k, f_k, g_k, path, params);
}

namespace {

void check_ensemble_inputs(const SourcePair& sources, const LevyParams& params, double horizon,
                           int modes) {
  params.validate();
  if (std::abs(sources.time.b() - horizon) > 1e-12 * horizon || sources.time.a() != 0.0) {
    throw DomainError("ensemble: time grid must span [0, T]");
  }
  if (modes < 1 || modes > sources.modes()) {
    throw DomainError("ensemble: mode count " + std::to_string(modes) + " outside 1.." +
                      std::to_string(sources.modes()));
  }
}

Eigen::VectorXd modal_sample(const ModalIntegrator& integ, const SourcePair& sources,
                             const LevyParams& params, std::uint64_t base_seed, std::uint64_t n) {
  const LevyPath path =
      sample_levy_path(params, integ.horizon(), integ.n_steps(), mix_seed(base_seed, 2 * n));
  Eigen::VectorXd u(integ.modes());
  for (int k = 1; k <= integ.modes(); ++k) {
    u[k - 1] = integ.final_value(k, sources.f_coeffs[k - 1], sources.g_coeffs[k - 1], path, params);
  }
  return u;
}

template <class Fn>
void parallel_rows(int n_rows, unsigned workers, Fn&& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max(n_rows, 1)));
  if (workers <= 1) {
    for (int n = 0; n < n_rows; ++n) fn(n);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int n = static_cast<int>(w); n < n_rows; n += static_cast<int>(workers)) fn(n);
    });
  }
}

}  // namespace

Eigen::VectorXd ensemble_modal_sample(const SourcePair& sources, const LevyParams& params,
                                      double horizon, int modes, std::uint64_t base_seed,
                                      std::uint64_t n) {
  check_ensemble_inputs(sources, params, horizon, modes);
  const ModalIntegrator integ(modes, horizon, static_cast<int>(sources.time.cells()), sources.h_values);
  return modal_sample(integ, sources, params, base_seed, n);
}

Ensemble simulate_ensemble(const SourcePair& sources, const LevyParams& params, double horizon,
                           int modes, int n_samples, double noise_level, std::uint64_t base_seed,
                           unsigned workers) {
  check_ensemble_inputs(sources, params, horizon, modes);
  if (n_samples < 1) throw DomainError("ensemble: need at least one sample");
  if (!(noise_level >= 0.0)) throw DomainError("ensemble: noise level must be >= 0");

  const ModalIntegrator integ(modes, horizon, static_cast<int>(sources.time.cells()), sources.h_values);
  const SineBasis basis(sources.space.b(), modes);
  const Eigen::MatrixXd phi = eigenfunction_table(basis, sources.space);  // K × (N_x+1)

  Ensemble ens;
  ens.fields.resize(n_samples, phi.cols());
  ens.noise_level = noise_level;
  ens.base_seed = base_seed;

  parallel_rows(n_samples, workers, [&](int n) {
    const auto nn = static_cast<std::uint64_t>(n);
    const Eigen::VectorXd u = modal_sample(integ, sources, params, base_seed, nn);
    Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(phi.cols());
    for (Eigen::Index k = 0; k < u.size(); ++k) row += u[k] * phi.row(k);
    if (noise_level > 0.0) {
      Rng noise(mix_seed(base_seed, 2 * nn + 1));
      for (Eigen::Index i = 0; i < row.size(); ++i) row[i] += noise.normal(0.0, noise_level);
    }
    ens.fields.row(n) = row;
  });
  return ens;
}

ModalStats ensemble_statistics(const Ensemble& ens, const Grid& space, const SineBasis& basis, int modes) {
  if (modes < 1 || modes > basis.modes()) throw DomainError("statistics: mode count out of range");
  if (ens.fields.rows() < 2) throw DomainError("statistics: covariance needs at least 2 samples");
  if (static_cast<std::size_t>(ens.fields.cols()) != space.size()) {
    throw DomainError("statistics: ensemble rows do not match the spatial grid");
  }
  // U(n, k) = sum_i u_obs^(n)(x_i) phi_k(x_i) dx. Row by row through project_all rather than
  // one GEMM: a blocked product can round equal rows differently.
  const SineBasis head(basis.length(), modes);
  Eigen::MatrixXd proj(ens.fields.rows(), modes);
  for (Eigen::Index r = 0; r < ens.fields.rows(); ++r) {
    proj.row(r) = project_all(ens.fields.row(r).transpose(), space, head).transpose();
  }
  const auto n = static_cast<double>(proj.rows());

  // Shift by the first sample so identical rows give exactly zero covariance.
  const Eigen::RowVectorXd shift = proj.row(0);
  const Eigen::MatrixXd shifted = proj.rowwise() - shift;
  const Eigen::RowVectorXd shifted_mean = shifted.colwise().sum() / n;
  const Eigen::MatrixXd centered = shifted.rowwise() - shifted_mean;

  ModalStats stats;
  stats.mean = (shift + shifted_mean).transpose();
  Eigen::MatrixXd cov = (centered.transpose() * centered) / (n - 1.0);
  stats.cov = 0.5 * (cov + cov.transpose());
  stats.n_samples = static_cast<int>(proj.rows());
  return stats;
}

double energy_bound(const SourcePair& sources, const LevyParams& params, double horizon) {
  const double dx = sources.space.spacing();
  const double f_norm2 = sources.f_values.squaredNorm() * dx;
  const double g_norm2 = sources.g_values.squaredNorm() * dx;
  const double h_inf = sources.h_values.cwiseAbs().maxCoeff();
  const double t3 = horizon * horizon * horizon;
  const double t4 = t3 * horizon;
  const double b = params.drift;
  const double s = params.volatility;
  return (2.0 * t4 / 3.0) * h_inf * h_inf * f_norm2 +
         ((2.0 * t4 * b * b + t3 * s * s + t3 * params.jump_rate * params.jump_std * params.jump_std) /
          3.0) *
             g_norm2;
}

EnergyCheck energy_bound_check(const SourcePair& sources, const LevyParams& params, double horizon,
                               int n_samples, std::uint64_t seed) {
  if (n_samples < 100) throw DomainError("energy check: need at least 100 samples");
  const int modes = sources.modes();
  check_ensemble_inputs(sources, params, horizon, modes);
  const ModalIntegrator integ(modes, horizon, static_cast<int>(sources.time.cells()), sources.h_values);

  Eigen::VectorXd energy(n_samples);
  for (int n = 0; n < n_samples; ++n) {
    energy[n] = modal_sample(integ, sources, params, seed, static_cast<std::uint64_t>(n)).squaredNorm();
  }
  EnergyCheck check;
  check.estimate = energy.mean();
  const double var = (energy.array() - check.estimate).square().sum() / (n_samples - 1);
  check.std_error = std::sqrt(var / n_samples);
  check.bound = energy_bound(sources, params, horizon);
  return check;
}

}  // namespace swinv
