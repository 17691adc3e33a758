// swinv: batch runner for the Helmholtz and Lévy source reconstructions.
//
//   swinv run <config.json> [--seed N] [--output-dir PATH] [--workers N]
//   swinv check <config.json>
//   swinv presets
//
// Exit codes: 0 success, 2 config error, 3 numerical degeneracy, 4 I/O error.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "swinv/errors.hpp"
#include "swinv/experiment.hpp"
#include "swinv/presets.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kDegenerate = 3;
constexpr int kIoError = 4;

void print_presets() {
  std::cout << "helmholtz strength presets (helmholtz.true_mu, y in [0, 1]):\n";
  for (const auto& p : swinv::strength_presets()) std::cout << "  " << p.id << "\t" << p.formula << "\n";
  std::cout << "levy source profiles (levy.true_f / levy.true_g, x in [0, pi]):\n";
  for (const auto& p : swinv::source_presets()) std::cout << "  " << p.id << "\t" << p.formula << "\n";
  std::cout << "levy time profiles (levy.h):\n";
  for (const auto& p : swinv::time_presets()) std::cout << "  " << p.id << "\t" << p.formula << "\n";
}

void print_summary(const swinv::ExperimentConfig& cfg) {
  std::cout << "wrote " << swinv::to_string(cfg.kind) << " results to " << cfg.output_dir.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Source reconstruction for stochastic wave equations"};
  app.require_subcommand(1);

  std::string run_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output_dir;
  std::optional<unsigned> workers;
  auto* run = app.add_subcommand("run", "Run an experiment and write its result files");
  run->add_option("config", run_path, "Experiment config (JSON)")->required();
  run->add_option("--seed", seed, "Override the config seed");
  run->add_option("--output-dir", output_dir, "Override the output directory");
  run->add_option("--workers", workers, "Worker threads for ensemble sampling (results do not depend on it)");

  std::string check_path;
  auto* check = app.add_subcommand("check", "Validate a config and print it with defaults filled in");
  check->add_option("config", check_path, "Experiment config (JSON)")->required();

  auto* presets = app.add_subcommand("presets", "List the preset truths");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (presets->parsed()) {
      print_presets();
      return 0;
    }
    if (check->parsed()) {
      const auto cfg = swinv::load_config(check_path);
      std::cout << swinv::config_to_json(cfg);
      return 0;
    }
    auto cfg = swinv::load_config(run_path);
    if (seed) cfg.seed = *seed;
    if (output_dir) cfg.output_dir = *output_dir;
    if (workers) cfg.workers = *workers;
    swinv::run_experiment(cfg);
    print_summary(cfg);
    return 0;
  } catch (const swinv::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const swinv::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const swinv::DegenerateError& e) {
    std::cerr << "numerical degeneracy: " << e.what() << "\n";
    return kDegenerate;
  } catch (const swinv::DomainError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
