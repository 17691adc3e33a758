#pragma once

#include <cstdint>
#include <random>

namespace swinv {

/// SplitMix64 finalizer. Stream n of a run seeded with `base` uses
/// `mix_seed(base, n)`, so every sample is reproducible from (base, n) alone
/// and independent of how samples are distributed over workers.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) noexcept;

/// Seeded engine with the handful of draws the samplers need.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal(double mean, double stddev);
  double uniform(double lo, double hi);
  std::uint64_t poisson(double mean);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace swinv
