#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace swinv {

struct Preset {
  std::string id;
  std::string formula;
  std::function<double(double)> fn;
};

/// Strength truths on [0, 1], ids "i" through "v". Presets "iv" and "v" dip
/// below zero; they can be inverted but not used to drive the wavefield sampler.
const std::vector<Preset>& strength_presets();

/// Spatial source profiles on [0, pi] for f and g: "sin", "gaussian_bump".
const std::vector<Preset>& source_presets();

/// Time profiles h(t) on [0, T] given as functions of t/T: "constant", "ramp".
const std::vector<Preset>& time_presets();

/// Lookup by id; throws ConfigError listing the valid ids.
const Preset& find_preset(const std::vector<Preset>& table, std::string_view id, std::string_view what);

}  // namespace swinv
