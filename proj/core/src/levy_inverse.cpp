#include "swinv/levy_inverse.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "swinv/errors.hpp"

namespace swinv {

double compute_I(int k, int l, double horizon) {
  if (k < 1 || l < 1) throw DomainError("compute_I: modes must be >= 1");
  if (!(horizon > 0.0)) throw DomainError("compute_I: horizon must be positive");
  if (k == l) {
    return (horizon / 2.0 - std::sin(2.0 * k * horizon) / (4.0 * k)) / (static_cast<double>(k) * k);
  }
  const int diff = k - l;
  const int sum = k + l;
  const std::complex<double> z1 = std::polar(1.0, diff * horizon) - 1.0;
  const std::complex<double> z2 = std::polar(1.0, sum * horizon) - 1.0;
  return (z1.imag() / diff - z2.imag() / sum) / (2.0 * k * l);
}

double compute_D(int k, const Eigen::Ref<const Eigen::VectorXd>& h, double horizon, int n_steps) {
  if (n_steps < 1) throw DomainError("compute_D: need at least one time step");
  if (h.size() != n_steps + 1) {
    throw DomainError("compute_D: h has " + std::to_string(h.size()) + " samples for " +
                      std::to_string(n_steps + 1) + " time nodes");
  }
  if (h.size() > 0 && h.minCoeff() < 0.0) throw DomainError("compute_D: h must be non-negative");
  const double dt = horizon / n_steps;
  double sum = 0.0;
  for (int j = 0; j < n_steps; ++j) sum += h[j] * kernel_A(k, j * dt, horizon) * dt;
  return sum;
}

TimeKernelMatrix TimeKernelMatrix::build(double horizon, int modes,
                                         const Eigen::Ref<const Eigen::VectorXd>& h, int n_steps) {
  if (modes < 1) throw DomainError("time kernel: need at least one mode");
  TimeKernelMatrix tkm;
  tkm.horizon = horizon;
  tkm.modes = modes;
  tkm.I.resize(modes, modes);
  for (int k = 1; k <= modes; ++k) {
    for (int l = k; l <= modes; ++l) {
      const double v = compute_I(k, l, horizon);
      tkm.I(k - 1, l - 1) = v;
      tkm.I(l - 1, k - 1) = v;
    }
  }
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n_steps + 1);
  tkm.D.resize(modes);
  tkm.A_integral.resize(modes);
  for (int k = 1; k <= modes; ++k) {
    tkm.D[k - 1] = compute_D(k, h, horizon, n_steps);
    tkm.A_integral[k - 1] = compute_D(k, ones, horizon, n_steps);
  }
  return tkm;
}

Eigen::VectorXd reconstruct_f(const ModalStats& stats, const TimeKernelMatrix& tkm,
                              const LevyParams& params, const std::optional<Eigen::VectorXd>& g_coeffs) {
  const Eigen::Index modes = stats.mean.size();
  if (modes > tkm.D.size()) throw DomainError("reconstruct_f: more modes than the time kernel holds");
  if (params.drift != 0.0) {
    if (!g_coeffs) throw DomainError("reconstruct_f: drift b != 0 requires g coefficients");
    if (g_coeffs->size() != modes) throw DomainError("reconstruct_f: g coefficient count mismatch");
  }
  Eigen::VectorXd f(modes);
  for (Eigen::Index k = 0; k < modes; ++k) {
    const double d = tkm.D[k];
    if (std::abs(d) < 1e-8) {
      throw DegenerateError("reconstruct_f: forced response D_" + std::to_string(k + 1) + " = " +
                            std::to_string(d) + " is below 1e-8; mode " + std::to_string(k + 1) +
                            " cannot be recovered");
    }
    double mean = stats.mean[k];
    if (params.drift != 0.0) mean -= params.drift * (*g_coeffs)[k] * tkm.A_integral[k];
    f[k] = mean / d;
  }
  return f;
}

double covariance_objective(const Eigen::Ref<const Eigen::MatrixXd>& cov,
                            const Eigen::Ref<const Eigen::VectorXd>& g, double gamma,
                            const Eigen::Ref<const Eigen::MatrixXd>& I, double noise_floor, double alpha) {
  const Eigen::Index n = g.size();
  double sum = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = 0; l < n; ++l) {
      const double model = gamma * g[k] * g[l] * I(k, l) + (k == l ? noise_floor : 0.0);
      const double r = cov(k, l) - model;
      sum += r * r;
    }
  }
  return sum + alpha * g.squaredNorm();
}

Eigen::VectorXd covariance_gradient(const Eigen::Ref<const Eigen::MatrixXd>& cov,
                                    const Eigen::Ref<const Eigen::VectorXd>& g, double gamma,
                                    const Eigen::Ref<const Eigen::MatrixXd>& I, double noise_floor,
                                    double alpha) {
  const Eigen::Index n = g.size();
  Eigen::MatrixXd weighted(n, n);  // R_kl I_kl
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = 0; l < n; ++l) {
      const double model = gamma * g[k] * g[l] * I(k, l) + (k == l ? noise_floor : 0.0);
      weighted(k, l) = (cov(k, l) - model) * I(k, l);
    }
  }
  // R and I are symmetric, so both index positions contribute equally.
  return -4.0 * gamma * (weighted * g) + 2.0 * alpha * g;
}

namespace {

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

Eigen::VectorXd assign_signs(const Eigen::VectorXd& magnitude, const Eigen::MatrixXd& cov,
                             const Eigen::MatrixXd& I, const CovarianceFitOptions& options) {
  Eigen::VectorXd g = magnitude;
  switch (options.sign_policy) {
    case SignPolicy::oracle_sign:
      for (Eigen::Index k = 0; k < g.size(); ++k) g[k] *= sign_of((*options.oracle)[k]);
      break;
    case SignPolicy::magnitude:  // the fit still needs consistent relative signs
    case SignPolicy::anchor_first_mode: {
      // C_al = gamma g_a g_l I_al, so sign(g_l) = sign(C_al I_al) once g_a > 0.
      Eigen::Index anchor = 0;
      if (magnitude[0] == 0.0) magnitude.maxCoeff(&anchor);
      for (Eigen::Index l = 0; l < g.size(); ++l) {
        if (l != anchor) g[l] *= sign_of(cov(anchor, l) * I(anchor, l));
      }
      break;
    }
  }
  return g;
}

}  // namespace

CovarianceFit fit_covariance(const ModalStats& stats, const TimeKernelMatrix& tkm,
                             const LevyParams& params, const CovarianceFitOptions& options) {
  const Eigen::Index modes = stats.cov.rows();
  if (stats.cov.cols() != modes || modes < 1) throw DomainError("fit: covariance must be square");
  if (modes > tkm.I.rows()) throw DomainError("fit: more modes than the time kernel holds");
  if (!(options.alpha >= 0.0)) throw DomainError("fit: alpha must be >= 0");
  if (options.sign_policy == SignPolicy::oracle_sign &&
      (!options.oracle || options.oracle->size() != modes)) {
    throw DomainError("fit: oracle_sign needs the true coefficients for every mode");
  }
  const double gamma = params.gamma();
  if (!(gamma > 0.0)) {
    throw DegenerateError("fit: sigma² + lambda_p sigma_J² = 0, g is not identifiable from the covariance");
  }
  const Eigen::MatrixXd I = tkm.I.topLeftCorner(modes, modes);
  for (Eigen::Index k = 0; k < modes; ++k) {
    if (I(k, k) < 1e-10) {
      throw DegenerateError("fit: I_" + std::to_string(k + 1) + std::to_string(k + 1) +
                            " below 1e-10; mode " + std::to_string(k + 1) + " is unidentifiable");
    }
  }

  CovarianceFit fit;
  Eigen::VectorXd magnitude(modes);
  for (Eigen::Index k = 0; k < modes; ++k) {
    magnitude[k] = std::sqrt(std::max(0.0, (stats.cov(k, k) - options.noise_floor) / (gamma * I(k, k))));
  }
  fit.seed = assign_signs(magnitude, stats.cov, I, options);

  Eigen::VectorXd g = fit.seed;
  double value = covariance_objective(stats.cov, g, gamma, I, options.noise_floor, options.alpha);
  Eigen::VectorXd grad = covariance_gradient(stats.cov, g, gamma, I, options.noise_floor, options.alpha);
  double step = 1.0;
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    if (grad.norm() <= options.gradient_tolerance) break;
    fit.objective_history.push_back(value);
    const double slope = grad.squaredNorm();
    bool accepted = false;
    for (int tries = 0; tries < 200; ++tries) {
      const Eigen::VectorXd trial = g - step * grad;
      const double trial_value =
          covariance_objective(stats.cov, trial, gamma, I, options.noise_floor, options.alpha);
      if (trial_value <= value - 1e-4 * step * slope) {
        g = trial;
        value = trial_value;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    grad = covariance_gradient(stats.cov, g, gamma, I, options.noise_floor, options.alpha);
    step *= 2.0;
  }
  fit.objective_history.push_back(value);
  fit.iterations = it;
  fit.gradient_norm = grad.norm();

  switch (options.sign_policy) {
    case SignPolicy::magnitude:
      g = g.cwiseAbs();
      break;
    case SignPolicy::oracle_sign:
      if (g.dot(*options.oracle) < 0.0) g = -g;
      break;
    case SignPolicy::anchor_first_mode: {
      Eigen::Index anchor = 0;
      if (magnitude[0] == 0.0) magnitude.maxCoeff(&anchor);
      if (g[anchor] < 0.0) g = -g;
      break;
    }
  }
  fit.g = g;
  return fit;
}

Eigen::VectorXd reconstruct_g(const ModalStats& stats, const TimeKernelMatrix& tkm,
                              const LevyParams& params, const CovarianceFitOptions& options) {
  return fit_covariance(stats, tkm, params, options).g;
}

double relative_l2_error(const Eigen::Ref<const Eigen::VectorXd>& truth,
                         const Eigen::Ref<const Eigen::VectorXd>& rec, const Grid& grid) {
  if (truth.size() != rec.size() || static_cast<std::size_t>(truth.size()) != grid.size()) {
    throw DomainError("relative_l2_error: truth, reconstruction and grid sizes differ");
  }
  const double dx = grid.spacing();
  const double denom = std::sqrt(truth.squaredNorm() * dx);
  if (!(denom > 0.0)) throw DomainError("relative_l2_error: truth field is zero");
  return std::sqrt((truth - rec).squaredNorm() * dx) / denom;
}

Reconstruction reconstruct_sources(const ModalStats& stats, const SourcePair& sources,
                                   const LevyParams& params, double horizon,
                                   const CovarianceFitOptions& options) {
  const auto modes = static_cast<int>(stats.mean.size());
  const TimeKernelMatrix tkm =
      TimeKernelMatrix::build(horizon, modes, sources.h_values, static_cast<int>(sources.time.cells()));
  const SineBasis basis(sources.space.b(), modes);

  Reconstruction rec;
  rec.gamma = params.gamma();
  if (rec.gamma > 0.0 || params.drift != 0.0) {
    rec.fit = fit_covariance(stats, tkm, params, options);
    rec.g_coeffs = rec.fit.g;
  } else {
    rec.g_identified = false;
    rec.g_coeffs = Eigen::VectorXd::Zero(modes);
  }
  rec.f_coeffs = reconstruct_f(stats, tkm, params,
                               params.drift != 0.0 ? std::optional<Eigen::VectorXd>(rec.g_coeffs)
                                                   : std::nullopt);
  rec.f_field = synthesize(rec.f_coeffs, basis, sources.space);
  rec.g_field = synthesize(rec.g_coeffs, basis, sources.space);
  rec.eps_f = relative_l2_error(sources.f_values, rec.f_field, sources.space);
  rec.eps_g = rec.g_identified ? relative_l2_error(sources.g_values, rec.g_field, sources.space)
                               : std::numeric_limits<double>::quiet_NaN();
  return rec;
}

}  // namespace swinv
