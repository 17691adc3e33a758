#pragma once

#include <vector>

#include <Eigen/Dense>

namespace swinv {

/// Per-frequency blocks A^(k) and their vertical stack, in frequency order.
struct DesignMatrix {
  std::vector<Eigen::MatrixXd> blocks;
  Eigen::MatrixXd stacked;
};

struct StackedSystem {
  DesignMatrix design;
  Eigen::VectorXd data;
};

/// Throws DomainError when blocks disagree on column count or a data block
/// does not match its block's row count.
StackedSystem stack_frequencies(std::vector<Eigen::MatrixXd> blocks,
                                const std::vector<Eigen::VectorXd>& data_blocks);

/// Thin SVD A = U diag(sigma) Vᵀ with sigma non-increasing.
struct SvdFactors {
  Eigen::MatrixXd U;
  Eigen::VectorXd sigma;
  Eigen::MatrixXd V;
};

/// Rejects non-finite entries.
SvdFactors compute_svd(const Eigen::Ref<const Eigen::MatrixXd>& a);

struct TikhonovSolution {
  Eigen::VectorXd mu_alpha;
  double alpha = 0.0;
  double residual_norm = 0.0;  ///< ‖H - A mu_alpha‖₂
  double solution_norm = 0.0;  ///< ‖mu_alpha‖₂
  double condition_number = 0.0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
};

/// Minimizer of ‖H - A mu‖² + alpha ‖mu‖² through SVD filter factors
/// sigma_i / (sigma_i² + alpha). No rank cutoff is applied.
TikhonovSolution tikhonov_solve(const Eigen::Ref<const Eigen::MatrixXd>& a,
                                const Eigen::Ref<const Eigen::VectorXd>& h, double alpha);

/// Same, reusing a factorization (parameter sweeps).
TikhonovSolution tikhonov_solve(const SvdFactors& svd, const Eigen::Ref<const Eigen::VectorXd>& h,
                                double alpha);

struct ConditionDiagnostics {
  double kappa = 0.0;  ///< +inf when sigma_min is below the rank cutoff
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  Eigen::Index numerical_rank = 0;
};

/// Singular values below this fraction of sigma_max count as zero.
double rank_cutoff_ratio();

ConditionDiagnostics condition_diagnostics(const Eigen::Ref<const Eigen::MatrixXd>& a);
ConditionDiagnostics condition_from_singular_values(const Eigen::Ref<const Eigen::VectorXd>& sigma);

/// alpha = c * delta, floored at 1e-14.
double choose_alpha(double delta, double c = 1.0);

/// Separate post-processing step; the solver itself is unconstrained.
Eigen::VectorXd clamp_nonnegative(const Eigen::Ref<const Eigen::VectorXd>& mu);

/// Minimum-norm least-squares solution with the diagnostic rank cutoff.
Eigen::VectorXd pseudo_inverse_solve(const SvdFactors& svd, const Eigen::Ref<const Eigen::VectorXd>& h);

/// The three data-to-solution Lipschitz constants for a Tikhonov solve:
/// 1/sqrt(alpha), sigma_max/alpha and the sharp 1/(2 sqrt(alpha)).
struct StabilityConstants {
  double inv_sqrt_alpha = 0.0;
  double sigma_max_over_alpha = 0.0;
  double half_inv_sqrt_alpha = 0.0;
};

StabilityConstants stability_constants(double alpha, double sigma_max);

/// L-curve sample (residual norm vs solution norm over a set of alphas).
struct LCurvePoint {
  double alpha = 0.0;
  double residual_norm = 0.0;
  double solution_norm = 0.0;
};

std::vector<LCurvePoint> l_curve(const SvdFactors& svd, const Eigen::Ref<const Eigen::VectorXd>& h,
                                 const std::vector<double>& alphas);

}  // namespace swinv
