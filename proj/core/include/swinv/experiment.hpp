#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "swinv/helmholtz_forward.hpp"
#include "swinv/levy_forward.hpp"
#include "swinv/levy_inverse.hpp"
#include "swinv/tikhonov.hpp"

namespace swinv {

enum class ExperimentKind { helmholtz, levy };

struct HelmholtzConfig {
  std::string true_mu = "i";
  std::vector<double> freqs = {1.0, 2.0, 3.0};
  int M = 200;
  int N = 200;
  std::optional<double> alpha;  ///< unset: choose_alpha(noise_level * sqrt(M K), alpha_scale)
  double alpha_scale = 1.0;
  double noise_level = 0.0;
  KernelVariant kernel_variant = KernelVariant::cos2_2nu;
  bool fine_data = false;  ///< synthesize data from the truth on a 2x finer source grid
};

struct LevyConfig {
  std::string true_f = "sin";
  std::string true_g = "sin";
  std::string h_profile = "constant";
  double T = 1.0;
  int K = 5;
  int N_x = 100;
  int N_t = 1000;
  int n_samples = 2000;
  LevyParams params;
  double noise_level = 0.001;
  double fit_alpha = 0.0;
  std::optional<double> noise_floor;  ///< unset: noise_level² * dx
  SignPolicy sign_policy = SignPolicy::anchor_first_mode;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::levy;
  std::uint64_t seed = 0;
  std::filesystem::path output_dir = "out";
  unsigned workers = 0;  ///< 0: hardware concurrency; never affects results
  std::optional<HelmholtzConfig> helmholtz;
  std::optional<LevyConfig> levy;
};

/// Strict JSON parsing: unknown keys, wrong types and invariant violations
/// raise ConfigError with a dotted path ("levy.params.sigma: ...").
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Normalized JSON echo with every default filled in.
std::string config_to_json(const ExperimentConfig& cfg);

std::string_view to_string(ExperimentKind kind);
std::string_view to_string(KernelVariant variant);
std::string_view to_string(SignPolicy policy);

/// Discretized Helmholtz problem for one configuration.
struct HelmholtzProblem {
  StrengthField truth;        ///< on the inversion grid
  StrengthField data_truth;   ///< the field the data were generated from
  FrequencySet freqs;
  Eigen::VectorXd obs_points;
  StackedSystem system;       ///< stacked design matrix and noisy data
  Eigen::VectorXd clean_data; ///< stacked forward data without noise
  double delta = 0.0;         ///< ‖noisy - clean‖₂
};

HelmholtzProblem build_helmholtz_problem(const HelmholtzConfig& cfg, std::uint64_t seed);

struct HelmholtzReport {
  TikhonovSolution solution;
  std::vector<ConditionDiagnostics> blocks;
  ConditionDiagnostics stacked;
  double relative_l2_error = 0.0;
  double relative_l2_error_clamped = 0.0;
};

/// Runs the inversion and writes mu_true.csv, mu_rec.csv, observations.csv
/// and diagnostics.json into cfg.output_dir.
HelmholtzReport run_helmholtz_experiment(const ExperimentConfig& cfg);

/// Grids and sampled truths for one Lévy configuration (L = pi).
SourcePair build_levy_sources(const LevyConfig& cfg);

struct LevyReport {
  ModalStats stats;
  Reconstruction reconstruction;
  double noise_floor = 0.0;
};

/// Simulates the ensemble, inverts it and writes f_true.csv, f_rec.csv,
/// g_true.csv, g_rec.csv, stats.json and errors.json into cfg.output_dir.
LevyReport run_levy_experiment(const ExperimentConfig& cfg);

/// Dispatch on cfg.kind.
void run_experiment(const ExperimentConfig& cfg);

/// 17 significant digits, shortest form that round-trips.
std::string format_real(double v);

}  // namespace swinv
