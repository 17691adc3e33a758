#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "swinv/grid_basis.hpp"

namespace swinv {

/// Finite-jump Lévy driver L_t = b t + sigma W_t + sum_{j <= N_t} J_j with
/// N_t ~ Poisson(lambda_p t) and J_j ~ N(0, sigma_J²).
struct LevyParams {
  double drift = 0.0;        ///< b
  double volatility = 0.1;   ///< sigma
  double jump_rate = 5.0;    ///< lambda_p, expected jumps per unit time
  double jump_std = 0.1;     ///< sigma_J

  /// Throws DomainError on negative sigma, lambda_p, sigma_J.
  void validate() const;

  /// Per-mode covariance intensity sigma² + lambda_p sigma_J².
  double gamma() const noexcept { return volatility * volatility + jump_rate * jump_std * jump_std; }
};

/// One driving path on the time grid t_j = j T / N_t.
struct LevyPath {
  double horizon = 0.0;
  Eigen::VectorXd dW;               ///< N_t Brownian increments, dW[j-1] on [t_{j-1}, t_j]
  std::vector<double> jump_times;   ///< sorted, in [0, T]
  std::vector<double> jump_amps;

  std::size_t n_steps() const noexcept { return static_cast<std::size_t>(dW.size()); }
  std::size_t n_jumps() const noexcept { return jump_times.size(); }
};

LevyPath sample_levy_path(const LevyParams& params, double horizon, int n_steps, std::uint64_t seed);

/// Mode-k wave propagator sin(k(T - t)) / k.
double kernel_A(int k, double t, double horizon);

/// Sources f(x) h(t) + g(x) dL_t sampled on the space and time grids, with
/// their modal coefficients.
struct SourcePair {
  Grid space;
  Grid time;
  Eigen::VectorXd f_values;
  Eigen::VectorXd g_values;
  Eigen::VectorXd h_values;  ///< on all N_t + 1 time nodes
  Eigen::VectorXd f_coeffs;
  Eigen::VectorXd g_coeffs;

  /// Projects f and g onto `basis` and checks h >= 0 with a positive entry.
  static SourcePair build(Grid space, Grid time, const SineBasis& basis, Eigen::VectorXd f_values,
                          Eigen::VectorXd g_values, Eigen::VectorXd h_values);

  int modes() const noexcept { return static_cast<int>(f_coeffs.size()); }
};

/// Tabulated A_k(t_j) for k = 1..K and j = 0..N_t, used to evaluate many
/// modal final values against one time grid.
class ModalIntegrator {
 public:
  ModalIntegrator(int modes, double horizon, int n_steps, const Eigen::Ref<const Eigen::VectorXd>& h);

  int modes() const noexcept { return static_cast<int>(table_.rows()); }
  int n_steps() const noexcept { return static_cast<int>(table_.cols()) - 1; }
  double horizon() const noexcept { return horizon_; }

  /// sum_{j<N_t} h(t_j) A_k(t_j) dt
  double forced_integral(int k) const { return forced_[k - 1]; }
  /// sum_{j<N_t} A_k(t_j) dt
  double drift_integral(int k) const { return drift_[k - 1]; }

  /// u_k(T) = f_k D_k + b g_k ∫A_k + sigma g_k sum_j A_k(t_{j-1}) dW_j + g_k sum_m A_k(s_m) J_m
  double final_value(int k, double f_k, double g_k, const LevyPath& path,
                     const LevyParams& params) const;

 private:
  Eigen::MatrixXd table_;  // (k-1, j) = A_k(t_j)
  Eigen::VectorXd forced_;
  Eigen::VectorXd drift_;
  double horizon_;
};

double mode_final_value(double f_k, double g_k, const Eigen::Ref<const Eigen::VectorXd>& h,
                        const LevyPath& path, int k, const LevyParams& params);

/// Observed final-time fields, one row per sample.
struct Ensemble {
  Eigen::MatrixXd fields;  ///< n_samples × (N_x + 1)
  double noise_level = 0.0;
  std::uint64_t base_seed = 0;
};

/// Row n uses mix_seed(base_seed, n) only, so the result does not depend on
/// `workers` (0 picks the hardware concurrency).
Ensemble simulate_ensemble(const SourcePair& sources, const LevyParams& params, double horizon,
                           int modes, int n_samples, double noise_level, std::uint64_t base_seed,
                           unsigned workers = 0);

/// Noise-free modal final values for sample n of an ensemble run (the same
/// draws simulate_ensemble uses before spatial synthesis).
Eigen::VectorXd ensemble_modal_sample(const SourcePair& sources, const LevyParams& params,
                                      double horizon, int modes, std::uint64_t base_seed,
                                      std::uint64_t n);

struct ModalStats {
  Eigen::VectorXd mean;  ///< U-bar_k
  Eigen::MatrixXd cov;   ///< C_kl with divisor n - 1
  int n_samples = 0;
};

/// Projects every row onto modes 1..K (rectangle rule over i = 0..N_x) and
/// forms the unbiased sample mean and covariance. Needs >= 2 rows.
ModalStats ensemble_statistics(const Ensemble& ens, const Grid& space, const SineBasis& basis, int modes);

struct EnergyCheck {
  double estimate = 0.0;   ///< Monte Carlo E‖u(·,T)‖²
  double std_error = 0.0;
  double bound = 0.0;      ///< closed-form stability bound
};

/// Closed-form bound
///   (2T⁴/3)‖h‖∞²‖f‖² + ((2T⁴b² + T³sigma² + T³lambda_p sigma_J²)/3)‖g‖².
double energy_bound(const SourcePair& sources, const LevyParams& params, double horizon);

/// Noise-free Monte Carlo estimate of E‖u(·,T)‖² over the modes carried by
/// `sources` (Parseval on modal values) against energy_bound. n_samples >= 100.
EnergyCheck energy_bound_check(const SourcePair& sources, const LevyParams& params, double horizon,
                               int n_samples, std::uint64_t seed);

}  // namespace swinv
