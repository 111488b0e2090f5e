#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "wavekin/field.hpp"
#include "wavekin/grid.hpp"
#include "wavekin/kinematics.hpp"

namespace wavekin {

enum class Scenario { rest, boosted, ray, generalized };

std::string_view to_string(Scenario s);
Scenario scenario_from_string(std::string_view tag);
Provenance provenance_of(Scenario s);

enum class ExportFormat { csv, json };

std::string_view to_string(ExportFormat f);
ExportFormat export_format_from_string(std::string_view tag);

struct RunConfig {
  Scenario scenario = Scenario::boosted;
  BoostParams params{.beta = 0.6};
  // Only meaningful for ray and generalized scenarios.
  std::optional<double> ray_speed;
  AmplitudeMode amplitude_mode = AmplitudeMode::unit;
  GridSpec grid = default_grid();
  std::uint64_t seed = 20260917;
  std::filesystem::path out;
  ExportFormat format = ExportFormat::csv;
  unsigned workers = 0;
  bool timestamp = true;
  int image_width = 1024;
  int image_height = 768;

  // (x, y) slab over [-10, 10]^2 at z = t = 0.
  static GridSpec default_grid();

  double effective_ray_speed() const {
    return ray_speed.value_or(params.c);
  }

  // Throws ConfigError for any inconsistency; called before computation.
  void validate() const;
};

// Flat `key = value` text. Lines starting with '#' are comments. Axis keys
// take `min:max:count` or a single fixed value.
using KeyValues = std::map<std::string, std::string, std::less<>>;

KeyValues parse_key_values(std::string_view text);
KeyValues load_key_values(const std::filesystem::path& path);

// Applies recognised keys onto cfg. Unknown keys are a ConfigError.
void apply_key_values(RunConfig& cfg, const KeyValues& kv);

// Parses `min:max:count` or a fixed value.
AxisSpec parse_axis(std::string_view text);

WaveField make_field(const RunConfig& cfg);

// Validates the config and samples its field.
FieldGrid sample(const RunConfig& cfg);

}  // namespace wavekin
