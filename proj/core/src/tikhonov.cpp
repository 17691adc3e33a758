#include "swinv/tikhonov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "swinv/errors.hpp"

namespace swinv {

StackedSystem stack_frequencies(std::vector<Eigen::MatrixXd> blocks,
                                const std::vector<Eigen::VectorXd>& data_blocks) {
  if (blocks.empty()) throw DomainError("stack: no blocks");
  if (blocks.size() != data_blocks.size()) {
    throw DomainError("stack: " + std::to_string(blocks.size()) + " blocks but " +
                      std::to_string(data_blocks.size()) + " data blocks");
  }
  const Eigen::Index cols = blocks.front().cols();
  Eigen::Index rows = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].cols() != cols) {
      throw DomainError("stack: block " + std::to_string(k) + " has " +
                        std::to_string(blocks[k].cols()) + " columns, expected " +
                        std::to_string(cols));
    }
    if (data_blocks[k].size() != blocks[k].rows()) {
      throw DomainError("stack: data block " + std::to_string(k) + " has " +
                        std::to_string(data_blocks[k].size()) + " entries for " +
                        std::to_string(blocks[k].rows()) + " rows");
    }
    rows += blocks[k].rows();
  }

  StackedSystem sys;
  sys.design.stacked.resize(rows, cols);
  sys.data.resize(rows);
  Eigen::Index offset = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const Eigen::Index r = blocks[k].rows();
    sys.design.stacked.middleRows(offset, r) = blocks[k];
    sys.data.segment(offset, r) = data_blocks[k];
    offset += r;
  }
  sys.design.blocks = std::move(blocks);
  return sys;
}

SvdFactors compute_svd(const Eigen::Ref<const Eigen::MatrixXd>& a) {
  if (a.size() == 0) throw DomainError("svd: empty matrix");
  if (!a.allFinite()) throw DomainError("svd: matrix has non-finite entries");
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return SvdFactors{svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

double rank_cutoff_ratio() { return 1e3 * std::numeric_limits<double>::epsilon(); }

ConditionDiagnostics condition_from_singular_values(const Eigen::Ref<const Eigen::VectorXd>& sigma) {
  if (sigma.size() == 0 || !(sigma.maxCoeff() > 0.0)) {
    throw DomainError("condition diagnostics: matrix has no nonzero singular value");
  }
  ConditionDiagnostics d;
  d.sigma_max = sigma.maxCoeff();
  d.sigma_min = sigma.minCoeff();
  const double cutoff = rank_cutoff_ratio() * d.sigma_max;
  d.numerical_rank = (sigma.array() >= cutoff).count();
  d.kappa = d.sigma_min < cutoff ? std::numeric_limits<double>::infinity() : d.sigma_max / d.sigma_min;
  return d;
}

ConditionDiagnostics condition_diagnostics(const Eigen::Ref<const Eigen::MatrixXd>& a) {
  return condition_from_singular_values(compute_svd(a).sigma);
}

TikhonovSolution tikhonov_solve(const SvdFactors& svd, const Eigen::Ref<const Eigen::VectorXd>& h,
                                double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("tikhonov: alpha must be positive, got " + std::to_string(alpha));
  }
  if (h.size() != svd.U.rows()) {
    throw DomainError("tikhonov: data has " + std::to_string(h.size()) + " entries for " +
                      std::to_string(svd.U.rows()) + " rows");
  }
  const Eigen::ArrayXd s = svd.sigma.array();
  const Eigen::VectorXd filtered = (s / (s.square() + alpha)).matrix().cwiseProduct(svd.U.transpose() * h);

  TikhonovSolution sol;
  sol.mu_alpha = svd.V * filtered;
  sol.alpha = alpha;
  // Residual from the factorization: H - A mu = H - U diag(sigma) Vᵀ mu.
  const Eigen::VectorXd fitted = svd.U * (svd.sigma.cwiseProduct(svd.V.transpose() * sol.mu_alpha));
  sol.residual_norm = (h - fitted).norm();
  sol.solution_norm = sol.mu_alpha.norm();
  const ConditionDiagnostics d = condition_from_singular_values(svd.sigma);
  sol.condition_number = d.kappa;
  sol.sigma_min = d.sigma_min;
  sol.sigma_max = d.sigma_max;
  return sol;
}

TikhonovSolution tikhonov_solve(const Eigen::Ref<const Eigen::MatrixXd>& a,
                                const Eigen::Ref<const Eigen::VectorXd>& h, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("tikhonov: alpha must be positive, got " + std::to_string(alpha));
  if (h.size() != a.rows()) {
    throw DomainError("tikhonov: data has " + std::to_string(h.size()) + " entries for " +
                      std::to_string(a.rows()) + " rows");
  }
  TikhonovSolution sol = tikhonov_solve(compute_svd(a), h, alpha);
  sol.residual_norm = (h - a * sol.mu_alpha).norm();
  return sol;
}

double choose_alpha(double delta, double c) {
  if (!(delta >= 0.0)) throw DomainError("choose_alpha: delta must be >= 0");
  if (!(c > 0.0)) throw DomainError("choose_alpha: scale must be > 0");
  return std::max(c * delta, 1e-14);
}

Eigen::VectorXd clamp_nonnegative(const Eigen::Ref<const Eigen::VectorXd>& mu) {
  return mu.cwiseMax(0.0);
}

Eigen::VectorXd pseudo_inverse_solve(const SvdFactors& svd, const Eigen::Ref<const Eigen::VectorXd>& h) {
  const double cutoff = rank_cutoff_ratio() * svd.sigma.maxCoeff();
  Eigen::VectorXd coeff = svd.U.transpose() * h;
  for (Eigen::Index i = 0; i < coeff.size(); ++i) {
    coeff[i] = svd.sigma[i] >= cutoff ? coeff[i] / svd.sigma[i] : 0.0;
  }
  return svd.V * coeff;
}

StabilityConstants stability_constants(double alpha, double sigma_max) {
  if (!(alpha > 0.0)) throw DomainError("stability constants: alpha must be positive");
  return StabilityConstants{1.0 / std::sqrt(alpha), sigma_max / alpha, 0.5 / std::sqrt(alpha)};
}

std::vector<LCurvePoint> l_curve(const SvdFactors& svd, const Eigen::Ref<const Eigen::VectorXd>& h,
                                 const std::vector<double>& alphas) {
  std::vector<LCurvePoint> curve;
  curve.reserve(alphas.size());
  for (double alpha : alphas) {
    const TikhonovSolution sol = tikhonov_solve(svd, h, alpha);
    curve.push_back({alpha, sol.residual_norm, sol.solution_norm});
  }
  return curve;
}

}  // namespace swinv
