#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "swinv/grid_basis.hpp"
#include "swinv/levy_forward.hpp"

namespace swinv {

/// I_kl = (1/(kl)) ∫₀ᵀ sin(ks) sin(ls) ds in closed form. Off-diagonal
/// entries use Im(e^{imT} - 1)/m for m = k - l and m = k + l.
double compute_I(int k, int l, double horizon);

/// Rectangle rule sum_{j<N_t} h(t_j) A_k(t_j) dt; h has n_steps + 1 samples.
double compute_D(int k, const Eigen::Ref<const Eigen::VectorXd>& h, double horizon, int n_steps);

struct TimeKernelMatrix {
  double horizon = 0.0;
  int modes = 0;
  Eigen::MatrixXd I;          ///< K × K
  Eigen::VectorXd D;          ///< forced response integrals
  Eigen::VectorXd A_integral; ///< sum_j A_k(t_j) dt, the drift response

  static TimeKernelMatrix build(double horizon, int modes, const Eigen::Ref<const Eigen::VectorXd>& h,
                                int n_steps);
};

/// Mean-to-f inversion f_k = (U-bar_k - b g_k ∫A_k) / D_k. Throws
/// DegenerateError naming k when |D_k| < 1e-8, and DomainError when b != 0
/// and no g coefficients are supplied.
Eigen::VectorXd reconstruct_f(const ModalStats& stats, const TimeKernelMatrix& tkm,
                              const LevyParams& params,
                              const std::optional<Eigen::VectorXd>& g_coeffs = std::nullopt);

enum class SignPolicy { magnitude, anchor_first_mode, oracle_sign };

struct CovarianceFitOptions {
  double alpha = 0.0;        ///< ridge weight on sum g_k²
  double noise_floor = 0.0;  ///< diagonal offset of the model covariance
  SignPolicy sign_policy = SignPolicy::anchor_first_mode;
  std::optional<Eigen::VectorXd> oracle;  ///< true coefficients, oracle_sign only
  double gradient_tolerance = 1e-10;
  int max_iterations = 500;
};

struct CovarianceFit {
  Eigen::VectorXd g;
  Eigen::VectorXd seed;                  ///< closed-form ratio estimate
  std::vector<double> objective_history; ///< J before each step, then the final value
  int iterations = 0;
  double gradient_norm = 0.0;
};

/// J(g) = sum_kl (C_kl - gamma g_k g_l I_kl - floor delta_kl)² + alpha sum_k g_k².
double covariance_objective(const Eigen::Ref<const Eigen::MatrixXd>& cov,
                            const Eigen::Ref<const Eigen::VectorXd>& g, double gamma,
                            const Eigen::Ref<const Eigen::MatrixXd>& I, double noise_floor, double alpha);

Eigen::VectorXd covariance_gradient(const Eigen::Ref<const Eigen::MatrixXd>& cov,
                                    const Eigen::Ref<const Eigen::VectorXd>& g, double gamma,
                                    const Eigen::Ref<const Eigen::MatrixXd>& I, double noise_floor,
                                    double alpha);

/// Covariance-to-g inversion: diagonal ratio seed, sign assignment, then
/// monotone gradient descent on J.
CovarianceFit fit_covariance(const ModalStats& stats, const TimeKernelMatrix& tkm,
                             const LevyParams& params, const CovarianceFitOptions& options);

Eigen::VectorXd reconstruct_g(const ModalStats& stats, const TimeKernelMatrix& tkm,
                              const LevyParams& params, const CovarianceFitOptions& options);

/// sqrt(sum (truth - rec)² dx) / sqrt(sum truth² dx) over all grid nodes.
double relative_l2_error(const Eigen::Ref<const Eigen::VectorXd>& truth,
                         const Eigen::Ref<const Eigen::VectorXd>& rec, const Grid& grid);

struct Reconstruction {
  Eigen::VectorXd f_coeffs;
  Eigen::VectorXd g_coeffs;
  Eigen::VectorXd f_field;
  Eigen::VectorXd g_field;
  double eps_f = 0.0;
  double eps_g = 0.0;  ///< NaN when g was not identified
  double gamma = 0.0;
  bool g_identified = true;
  CovarianceFit fit;
};

/// Full inversion: g from the covariance first, then f from the mean (the
/// drift term needs g). Fields are synthesized on sources.space and compared
/// against the truths in `sources`. With gamma = 0 and b = 0 the covariance
/// carries no information on g but f is still recoverable: g is reported as
/// zero with g_identified = false. gamma = 0 with b != 0 throws DegenerateError.
Reconstruction reconstruct_sources(const ModalStats& stats, const SourcePair& sources,
                                   const LevyParams& params, double horizon,
                                   const CovarianceFitOptions& options);

}  // namespace swinv
