#include "swinv/presets.hpp"

#include <cmath>
#include <numbers>

#include "swinv/errors.hpp"

namespace swinv {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
}  // namespace

const std::vector<Preset>& strength_presets() {
  static const std::vector<Preset> table = {
      {"i", "0.5(1 - cos(2 pi y))", [](double y) { return 0.5 * (1.0 - std::cos(2.0 * kPi * y)); }},
      {"ii", "0.6 - 0.3 cos(2 pi y) - 0.3 cos(4 pi y)",
       [](double y) { return 0.6 - 0.3 * std::cos(2.0 * kPi * y) - 0.3 * std::cos(4.0 * kPi * y); }},
      {"iii", "0.5 e - 0.3 exp(cos(4 pi y)) - 0.2 exp(cos(6 pi y))",
       [](double y) {
         return 0.5 * kE - 0.3 * std::exp(std::cos(4.0 * kPi * y)) - 0.2 * std::exp(std::cos(6.0 * kPi * y));
       }},
      {"iv", "0.5 exp(cos(6 pi y)) - 0.3 exp(sin(8 pi y))",
       [](double y) { return 0.5 * std::exp(std::cos(6.0 * kPi * y)) - 0.3 * std::exp(std::sin(8.0 * kPi * y)); }},
      {"v", "0.6 e - 0.5 exp(cos(6 pi y)) - 0.3 exp(sin(8 pi y))",
       [](double y) {
         return 0.6 * kE - 0.5 * std::exp(std::cos(6.0 * kPi * y)) - 0.3 * std::exp(std::sin(8.0 * kPi * y));
       }},
  };
  return table;
}

const std::vector<Preset>& source_presets() {
  static const std::vector<Preset> table = {
      {"sin", "sin(x)", [](double x) { return std::sin(x); }},
      {"gaussian_bump", "exp(-(x - pi/2)^2)",
       [](double x) {
         const double d = x - 0.5 * kPi;
         return std::exp(-d * d);
       }},
  };
  return table;
}

const std::vector<Preset>& time_presets() {
  static const std::vector<Preset> table = {
      {"constant", "h(t) = 1", [](double) { return 1.0; }},
      {"ramp", "h(t) = t / T", [](double s) { return s; }},
  };
  return table;
}

const Preset& find_preset(const std::vector<Preset>& table, std::string_view id, std::string_view what) {
  for (const auto& p : table) {
    if (p.id == id) return p;
  }
  std::string valid;
  for (const auto& p : table) valid += (valid.empty() ? "" : ", ") + p.id;
  throw ConfigError(std::string(what) + ": unknown preset '" + std::string(id) + "' (valid: " + valid + ")");
}

}  // namespace swinv
