#include "swinv/experiment.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "swinv/errors.hpp"
#include "swinv/presets.hpp"

namespace swinv {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string_view to_string(ExperimentKind kind) {
  return kind == ExperimentKind::helmholtz ? "helmholtz" : "levy";
}

std::string_view to_string(KernelVariant variant) {
  switch (variant) {
    case KernelVariant::h1: return "h1";
    case KernelVariant::h2: return "h2";
    case KernelVariant::cos2_2nu: break;
  }
  return "cos2_2nu";
}

std::string_view to_string(SignPolicy policy) {
  switch (policy) {
    case SignPolicy::magnitude: return "magnitude";
    case SignPolicy::oracle_sign: return "oracle_sign";
    case SignPolicy::anchor_first_mode: break;
  }
  return "anchor_first_mode";
}

std::string format_real(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

// ---------------------------------------------------------------------------
// Config parsing

namespace {

/// One JSON object plus its dotted path; tracks consumed keys so leftovers
/// can be reported as typos.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) fail(path_.empty() ? "<root>" : path_, "expected an object");
  }

  [[noreturn]] static void fail(const std::string& path, const std::string& msg) {
    throw ConfigError(path + ": " + msg);
  }

  std::string at(std::string_view key) const {
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }

  const json* find(std::string_view key) {
    seen_.insert(std::string(key));
    const auto it = obj_.find(std::string(key));
    return it == obj_.end() ? nullptr : &*it;
  }

  bool has(std::string_view key) const { return obj_.contains(std::string(key)); }

  double real(std::string_view key, double fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_number()) fail(at(key), "expected a number");
    const double x = v->get<double>();
    if (!std::isfinite(x)) fail(at(key), "expected a finite number");
    return x;
  }

  std::optional<double> optional_real(std::string_view key, std::optional<double> fallback) {
    const json* v = find(key);
    if (!v || v->is_null()) return v ? std::nullopt : fallback;
    if (!v->is_number()) fail(at(key), "expected a number or null");
    return v->get<double>();
  }

  int positive_int(std::string_view key, int fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_number_integer() || v->get<long long>() < 1 || v->get<long long>() > 100'000'000) {
      fail(at(key), "expected a positive integer");
    }
    return static_cast<int>(v->get<long long>());
  }

  std::uint64_t uint(std::string_view key, std::uint64_t fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<long long>() >= 0)) {
      fail(at(key), "expected a non-negative integer");
    }
    return v->get<std::uint64_t>();
  }

  bool boolean(std::string_view key, bool fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_boolean()) fail(at(key), "expected true or false");
    return v->get<bool>();
  }

  std::string string(std::string_view key, std::string fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_string()) fail(at(key), "expected a string");
    return v->get<std::string>();
  }

  std::vector<double> reals(std::string_view key, std::vector<double> fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_array() || v->empty()) fail(at(key), "expected a non-empty array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v->size(); ++i) {
      if (!(*v)[i].is_number()) fail(at(key) + "[" + std::to_string(i) + "]", "expected a number");
      out.push_back((*v)[i].get<double>());
    }
    return out;
  }

  void reject_unknown() const {
    for (const auto& [key, _] : obj_.items()) {
      if (!seen_.count(key)) fail(at(key), "unknown key");
    }
  }

 private:
  const json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

double non_negative(double v, const std::string& path) {
  if (!(v >= 0.0)) ObjectReader::fail(path, "must be >= 0");
  return v;
}

KernelVariant parse_variant(const std::string& s, const std::string& path) {
  if (s == "cos2_2nu") return KernelVariant::cos2_2nu;
  if (s == "h1") return KernelVariant::h1;
  if (s == "h2") return KernelVariant::h2;
  ObjectReader::fail(path, "unknown kernel variant '" + s + "' (valid: cos2_2nu, h1, h2)");
}

SignPolicy parse_policy(const std::string& s, const std::string& path) {
  if (s == "anchor_first_mode") return SignPolicy::anchor_first_mode;
  if (s == "magnitude") return SignPolicy::magnitude;
  if (s == "oracle_sign") return SignPolicy::oracle_sign;
  ObjectReader::fail(path, "unknown sign policy '" + s + "' (valid: anchor_first_mode, magnitude, oracle_sign)");
}

HelmholtzConfig parse_helmholtz(const json& obj) {
  ObjectReader r(obj, "helmholtz");
  HelmholtzConfig cfg;
  cfg.true_mu = r.string("true_mu", cfg.true_mu);
  find_preset(strength_presets(), cfg.true_mu, r.at("true_mu"));
  cfg.freqs = r.reals("freqs", cfg.freqs);
  try {
    FrequencySet check(cfg.freqs);
  } catch (const DomainError& e) {
    ObjectReader::fail(r.at("freqs"), e.what());
  }
  cfg.M = r.positive_int("M", cfg.M);
  if (cfg.M < 4) ObjectReader::fail(r.at("M"), "need at least 4 observation points");
  cfg.N = r.positive_int("N", cfg.N);
  cfg.alpha = r.optional_real("alpha", cfg.alpha);
  if (cfg.alpha && !(*cfg.alpha > 0.0)) ObjectReader::fail(r.at("alpha"), "must be > 0");
  cfg.alpha_scale = r.real("alpha_scale", cfg.alpha_scale);
  if (!(cfg.alpha_scale > 0.0)) ObjectReader::fail(r.at("alpha_scale"), "must be > 0");
  cfg.noise_level = non_negative(r.real("noise_level", cfg.noise_level), r.at("noise_level"));
  cfg.kernel_variant = parse_variant(r.string("kernel_variant", "cos2_2nu"), r.at("kernel_variant"));
  cfg.fine_data = r.boolean("fine_data", cfg.fine_data);
  r.reject_unknown();
  return cfg;
}

LevyParams parse_params(const json& obj) {
  ObjectReader r(obj, "levy.params");
  LevyParams p;
  p.drift = r.real("b", p.drift);
  p.volatility = non_negative(r.real("sigma", p.volatility), r.at("sigma"));
  p.jump_rate = non_negative(r.real("lambda_p", p.jump_rate), r.at("lambda_p"));
  p.jump_std = non_negative(r.real("sigma_J", p.jump_std), r.at("sigma_J"));
  r.reject_unknown();
  return p;
}

LevyConfig parse_levy(const json& obj) {
  ObjectReader r(obj, "levy");
  LevyConfig cfg;
  cfg.true_f = r.string("true_f", cfg.true_f);
  find_preset(source_presets(), cfg.true_f, r.at("true_f"));
  cfg.true_g = r.string("true_g", cfg.true_g);
  find_preset(source_presets(), cfg.true_g, r.at("true_g"));
  cfg.h_profile = r.string("h", cfg.h_profile);
  find_preset(time_presets(), cfg.h_profile, r.at("h"));
  cfg.T = r.real("T", cfg.T);
  if (!(cfg.T > 0.0)) ObjectReader::fail(r.at("T"), "must be > 0");
  cfg.K = r.positive_int("K", cfg.K);
  cfg.N_x = r.positive_int("N_x", cfg.N_x);
  if (cfg.K >= cfg.N_x) ObjectReader::fail(r.at("K"), "must be smaller than N_x");
  cfg.N_t = r.positive_int("N_t", cfg.N_t);
  cfg.n_samples = r.positive_int("n_samples", cfg.n_samples);
  if (cfg.n_samples < 2) ObjectReader::fail(r.at("n_samples"), "need at least 2 samples for a covariance");
  if (const json* p = r.find("params")) cfg.params = parse_params(*p);
  cfg.noise_level = non_negative(r.real("noise_level", cfg.noise_level), r.at("noise_level"));
  cfg.fit_alpha = non_negative(r.real("fit_alpha", cfg.fit_alpha), r.at("fit_alpha"));
  cfg.noise_floor = r.optional_real("noise_floor", cfg.noise_floor);
  if (cfg.noise_floor && !(*cfg.noise_floor >= 0.0)) ObjectReader::fail(r.at("noise_floor"), "must be >= 0");
  cfg.sign_policy = parse_policy(r.string("sign_policy", "anchor_first_mode"), r.at("sign_policy"));
  r.reject_unknown();
  return cfg;
}

}  // namespace

ExperimentConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("<root>: malformed JSON: ") + e.what());
  }
  ObjectReader r(root, "");
  ExperimentConfig cfg;

  const json* kind = r.find("kind");
  if (!kind) ObjectReader::fail("kind", "required key missing (helmholtz or levy)");
  if (!kind->is_string()) ObjectReader::fail("kind", "expected a string");
  const std::string k = kind->get<std::string>();
  if (k == "helmholtz") {
    cfg.kind = ExperimentKind::helmholtz;
  } else if (k == "levy") {
    cfg.kind = ExperimentKind::levy;
  } else {
    ObjectReader::fail("kind", "unknown kind '" + k + "' (valid: helmholtz, levy)");
  }

  cfg.seed = r.uint("seed", cfg.seed);
  cfg.output_dir = r.string("output_dir", cfg.output_dir.string());
  cfg.workers = static_cast<unsigned>(r.uint("workers", 0));

  const char* own = cfg.kind == ExperimentKind::helmholtz ? "helmholtz" : "levy";
  const char* other = cfg.kind == ExperimentKind::helmholtz ? "levy" : "helmholtz";
  if (r.has(other)) {
    ObjectReader::fail(other, std::string("block given but kind is '") + own + "'; a " + own +
                                  " experiment takes only a '" + own + "' block");
  }
  r.find(other);
  const json* block = r.find(own);
  const json empty = json::object();
  if (cfg.kind == ExperimentKind::helmholtz) {
    cfg.helmholtz = parse_helmholtz(block ? *block : empty);
  } else {
    cfg.levy = parse_levy(block ? *block : empty);
  }
  r.reject_unknown();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

namespace {

ordered_json real_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

template <class Opt>
ordered_json optional_json(const Opt& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

std::string config_to_json(const ExperimentConfig& cfg) {
  ordered_json out;
  out["kind"] = to_string(cfg.kind);
  out["seed"] = cfg.seed;
  out["output_dir"] = cfg.output_dir.string();
  out["workers"] = cfg.workers;
  if (cfg.helmholtz) {
    const auto& h = *cfg.helmholtz;
    out["helmholtz"] = {{"true_mu", h.true_mu},
                        {"freqs", h.freqs},
                        {"M", h.M},
                        {"N", h.N},
                        {"alpha", optional_json(h.alpha)},
                        {"alpha_scale", h.alpha_scale},
                        {"noise_level", h.noise_level},
                        {"kernel_variant", to_string(h.kernel_variant)},
                        {"fine_data", h.fine_data}};
  }
  if (cfg.levy) {
    const auto& l = *cfg.levy;
    out["levy"] = {{"true_f", l.true_f},
                   {"true_g", l.true_g},
                   {"h", l.h_profile},
                   {"T", l.T},
                   {"K", l.K},
                   {"N_x", l.N_x},
                   {"N_t", l.N_t},
                   {"n_samples", l.n_samples},
                   {"params",
                    {{"b", l.params.drift},
                     {"sigma", l.params.volatility},
                     {"lambda_p", l.params.jump_rate},
                     {"sigma_J", l.params.jump_std}}},
                   {"noise_level", l.noise_level},
                   {"fit_alpha", l.fit_alpha},
                   {"noise_floor", optional_json(l.noise_floor)},
                   {"sign_policy", to_string(l.sign_policy)}};
  }
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Output helpers

namespace {

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

std::string two_column_csv(std::string_view x_name, const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
  std::string s;
  s += x_name;
  s += ",value\n";
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    s += format_real(x[i]);
    s += ',';
    s += format_real(v[i]);
    s += '\n';
  }
  return s;
}

ordered_json diag_json(const ConditionDiagnostics& d) {
  return {{"sigma_min", d.sigma_min},
          {"sigma_max", d.sigma_max},
          {"kappa", real_or_null(d.kappa)},
          {"numerical_rank", d.numerical_rank}};
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

// ---------------------------------------------------------------------------
// Helmholtz

HelmholtzProblem build_helmholtz_problem(const HelmholtzConfig& cfg, std::uint64_t seed) {
  const Preset& preset = find_preset(strength_presets(), cfg.true_mu, "helmholtz.true_mu");
  const Grid grid = Grid::uniform(0.0, 1.0, static_cast<std::size_t>(cfg.N));
  StrengthField truth = StrengthField::sample(grid, preset.fn);
  StrengthField data_truth =
      cfg.fine_data ? StrengthField::sample(Grid::uniform(0.0, 1.0, 2 * static_cast<std::size_t>(cfg.N)), preset.fn)
                    : truth;
  FrequencySet freqs(cfg.freqs);
  Eigen::VectorXd obs = default_observation_points(cfg.M);

  const double noise = cfg.noise_level;
  const ObservationSet clean = synth_observations(data_truth, freqs, obs, 0.0, seed, cfg.kernel_variant);
  const ObservationSet noisy = synth_observations(data_truth, freqs, obs, noise, seed, cfg.kernel_variant);

  std::vector<Eigen::MatrixXd> blocks;
  std::vector<Eigen::VectorXd> data;
  Eigen::VectorXd clean_stacked(obs.size() * static_cast<Eigen::Index>(freqs.size()));
  for (std::size_t k = 0; k < freqs.size(); ++k) {
    const auto kk = static_cast<Eigen::Index>(k);
    blocks.push_back(assemble_matrix(freqs[k], obs, grid, cfg.kernel_variant));
    data.push_back(noisy.data.col(kk));
    clean_stacked.segment(kk * obs.size(), obs.size()) = clean.data.col(kk);
  }
  StackedSystem system = stack_frequencies(std::move(blocks), data);
  const double delta = (system.data - clean_stacked).norm();
  return HelmholtzProblem{std::move(truth), std::move(data_truth), std::move(freqs), std::move(obs),
                          std::move(system), std::move(clean_stacked), delta};
}

HelmholtzReport run_helmholtz_experiment(const ExperimentConfig& cfg) {
  if (cfg.kind != ExperimentKind::helmholtz || !cfg.helmholtz) {
    throw ConfigError("kind: run_helmholtz_experiment needs a helmholtz configuration");
  }
  const HelmholtzConfig& hc = *cfg.helmholtz;
  const HelmholtzProblem problem = build_helmholtz_problem(hc, cfg.seed);

  const double expected_delta =
      hc.noise_level * std::sqrt(static_cast<double>(problem.system.data.size()));
  const double alpha = hc.alpha ? *hc.alpha : choose_alpha(expected_delta, hc.alpha_scale);

  HelmholtzReport report;
  const SvdFactors svd = compute_svd(problem.system.design.stacked);
  report.solution = tikhonov_solve(svd, problem.system.data, alpha);
  report.solution.residual_norm =
      (problem.system.data - problem.system.design.stacked * report.solution.mu_alpha).norm();
  report.stacked = condition_from_singular_values(svd.sigma);
  for (const auto& block : problem.system.design.blocks) report.blocks.push_back(condition_diagnostics(block));

  const Eigen::VectorXd& truth = problem.truth.values();
  const Eigen::VectorXd& rec = report.solution.mu_alpha;
  const Eigen::VectorXd clamped = clamp_nonnegative(rec);
  report.relative_l2_error = (truth - rec).norm() / truth.norm();
  report.relative_l2_error_clamped = (truth - clamped).norm() / truth.norm();

  ensure_dir(cfg.output_dir);
  const Eigen::VectorXd y = problem.truth.nodes();
  write_text(cfg.output_dir / "mu_true.csv", two_column_csv("y", y, truth));
  write_text(cfg.output_dir / "mu_rec.csv", two_column_csv("y", y, rec));

  std::string obs_csv = "x,nu,value\n";
  const Eigen::Index m = problem.obs_points.size();
  for (std::size_t k = 0; k < problem.freqs.size(); ++k) {
    for (Eigen::Index i = 0; i < m; ++i) {
      obs_csv += format_real(problem.obs_points[i]) + ',' + format_real(problem.freqs[k]) + ',' +
                 format_real(problem.system.data[static_cast<Eigen::Index>(k) * m + i]) + '\n';
    }
  }
  write_text(cfg.output_dir / "observations.csv", obs_csv);

  const StabilityConstants stab = stability_constants(alpha, report.stacked.sigma_max);
  ordered_json diag;
  diag["kind"] = "helmholtz";
  diag["true_mu"] = hc.true_mu;
  diag["kernel_variant"] = to_string(hc.kernel_variant);
  diag["freqs"] = hc.freqs;
  diag["M"] = hc.M;
  diag["N"] = hc.N;
  diag["noise_level"] = hc.noise_level;
  diag["delta"] = problem.delta;
  diag["alpha"] = alpha;
  ordered_json blocks = ordered_json::array();
  for (std::size_t k = 0; k < report.blocks.size(); ++k) {
    ordered_json b = diag_json(report.blocks[k]);
    b["nu"] = hc.freqs[k];
    blocks.push_back(std::move(b));
  }
  diag["blocks"] = std::move(blocks);
  diag["stacked"] = diag_json(report.stacked);
  diag["residual_norm"] = report.solution.residual_norm;
  diag["solution_norm"] = report.solution.solution_norm;
  diag["relative_l2_error"] = report.relative_l2_error;
  diag["relative_l2_error_clamped"] = report.relative_l2_error_clamped;
  diag["true_has_negative"] = problem.truth.has_negative();
  diag["rec_has_negative"] = rec.minCoeff() < 0.0;
  diag["stability"] = {{"inv_sqrt_alpha", stab.inv_sqrt_alpha},
                       {"sigma_max_over_alpha", stab.sigma_max_over_alpha},
                       {"half_inv_sqrt_alpha", stab.half_inv_sqrt_alpha}};
  write_text(cfg.output_dir / "diagnostics.json", diag.dump(2) + "\n");
  return report;
}

// ---------------------------------------------------------------------------
// Lévy

SourcePair build_levy_sources(const LevyConfig& cfg) {
  const double length = std::numbers::pi;
  const Grid space = Grid::uniform(0.0, length, static_cast<std::size_t>(cfg.N_x));
  const Grid time = Grid::uniform(0.0, cfg.T, static_cast<std::size_t>(cfg.N_t));
  const Preset& f = find_preset(source_presets(), cfg.true_f, "levy.true_f");
  const Preset& g = find_preset(source_presets(), cfg.true_g, "levy.true_g");
  const Preset& h = find_preset(time_presets(), cfg.h_profile, "levy.h");
  Eigen::VectorXd fv = space.points().unaryExpr(f.fn);
  Eigen::VectorXd gv = space.points().unaryExpr(g.fn);
  Eigen::VectorXd hv = time.points().unaryExpr([&](double t) { return h.fn(t / cfg.T); });
  return SourcePair::build(space, time, SineBasis(length, cfg.K), std::move(fv), std::move(gv), std::move(hv));
}

LevyReport run_levy_experiment(const ExperimentConfig& cfg) {
  if (cfg.kind != ExperimentKind::levy || !cfg.levy) {
    throw ConfigError("kind: run_levy_experiment needs a levy configuration");
  }
  const LevyConfig& lc = *cfg.levy;
  const SourcePair sources = build_levy_sources(lc);
  const SineBasis basis(sources.space.b(), lc.K);

  const Ensemble ens = simulate_ensemble(sources, lc.params, lc.T, lc.K, lc.n_samples, lc.noise_level,
                                         cfg.seed, cfg.workers);
  LevyReport report;
  report.stats = ensemble_statistics(ens, sources.space, basis, lc.K);
  report.noise_floor =
      lc.noise_floor ? *lc.noise_floor : lc.noise_level * lc.noise_level * sources.space.spacing();

  CovarianceFitOptions options;
  options.alpha = lc.fit_alpha;
  options.noise_floor = report.noise_floor;
  options.sign_policy = lc.sign_policy;
  if (lc.sign_policy == SignPolicy::oracle_sign) options.oracle = sources.g_coeffs;
  report.reconstruction = reconstruct_sources(report.stats, sources, lc.params, lc.T, options);
  const Reconstruction& rec = report.reconstruction;

  ensure_dir(cfg.output_dir);
  const Eigen::VectorXd& x = sources.space.points();
  write_text(cfg.output_dir / "f_true.csv", two_column_csv("x", x, sources.f_values));
  write_text(cfg.output_dir / "f_rec.csv", two_column_csv("x", x, rec.f_field));
  write_text(cfg.output_dir / "g_true.csv", two_column_csv("x", x, sources.g_values));
  write_text(cfg.output_dir / "g_rec.csv", two_column_csv("x", x, rec.g_field));

  ordered_json stats;
  stats["n_samples"] = report.stats.n_samples;
  stats["K"] = lc.K;
  stats["mean"] = to_std(report.stats.mean);
  ordered_json cov = ordered_json::array();
  for (Eigen::Index k = 0; k < report.stats.cov.rows(); ++k) cov.push_back(to_std(report.stats.cov.row(k).transpose()));
  stats["cov"] = std::move(cov);
  write_text(cfg.output_dir / "stats.json", stats.dump(2) + "\n");

  ordered_json errors;
  errors["eps_f"] = rec.eps_f;
  errors["eps_g"] = real_or_null(rec.eps_g);
  errors["g_identified"] = rec.g_identified;
  errors["gamma"] = rec.gamma;
  errors["noise_level"] = lc.noise_level;
  errors["noise_floor"] = report.noise_floor;
  errors["fit_alpha"] = lc.fit_alpha;
  errors["sign_policy"] = to_string(lc.sign_policy);
  errors["fit_iterations"] = rec.fit.iterations;
  errors["fit_objective"] =
      rec.fit.objective_history.empty() ? ordered_json(nullptr) : ordered_json(rec.fit.objective_history.back());
  errors["fit_gradient_norm"] = rec.fit.gradient_norm;
  errors["f_coeffs"] = to_std(rec.f_coeffs);
  errors["g_coeffs"] = to_std(rec.g_coeffs);
  write_text(cfg.output_dir / "errors.json", errors.dump(2) + "\n");
  return report;
}

void run_experiment(const ExperimentConfig& cfg) {
  if (cfg.kind == ExperimentKind::helmholtz) {
    run_helmholtz_experiment(cfg);
  } else {
    run_levy_experiment(cfg);
  }
}

}  // namespace swinv
