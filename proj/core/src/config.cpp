#include "wavekin/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>
#include <string>

#include "wavekin/errors.hpp"

namespace wavekin {

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::rest: return "rest";
    case Scenario::boosted: return "boosted";
    case Scenario::ray: return "ray";
    case Scenario::generalized: return "generalized";
  }
  return "unknown";
}

Scenario scenario_from_string(std::string_view tag) {
  for (auto s : {Scenario::rest, Scenario::boosted, Scenario::ray,
                 Scenario::generalized}) {
    if (to_string(s) == tag) return s;
  }
  throw ConfigError("unknown scenario '" + std::string(tag) + "'");
}

Provenance provenance_of(Scenario s) {
  switch (s) {
    case Scenario::rest: return Provenance::rest;
    case Scenario::boosted: return Provenance::boosted_closed_form;
    case Scenario::ray: return Provenance::ray_constructed;
    case Scenario::generalized: return Provenance::generalized_closed_form;
  }
  return Provenance::rest;
}

std::string_view to_string(ExportFormat f) {
  return f == ExportFormat::csv ? "csv" : "json";
}

ExportFormat export_format_from_string(std::string_view tag) {
  if (tag == "csv") return ExportFormat::csv;
  if (tag == "json") return ExportFormat::json;
  throw ConfigError("unknown export format '" + std::string(tag) + "'");
}

GridSpec RunConfig::default_grid() {
  GridSpec g;
  g[AxisId::x] = {-10.0, 10.0, 201};
  g[AxisId::y] = {-10.0, 10.0, 201};
  return g;
}

void RunConfig::validate() const {
  try {
    params.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (ray_speed && scenario != Scenario::ray &&
      scenario != Scenario::generalized) {
    throw ConfigError("ray_speed is only valid for ray or generalized runs");
  }
  if (ray_speed && (!std::isfinite(*ray_speed) ||
                    !(*ray_speed > std::abs(params.velocity())))) {
    throw ConfigError("ray_speed must exceed the particle speed |beta c|");
  }
  if (amplitude_mode == AmplitudeMode::inverse_r &&
      scenario != Scenario::rest) {
    throw ConfigError("inverse-r amplitude is only valid for the rest scenario");
  }
  if (scenario == Scenario::boosted && params.exponent_a != 1.0) {
    throw ConfigError(
        "boosted scenario needs a = 1; use the generalized scenario");
  }
  grid.validate();
  if (image_width <= 0 || image_height <= 0) {
    throw ConfigError("image size must be positive");
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::string_view unquote(std::string_view s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("key '" + std::string(key) + "': '" + std::string(text) +
                      "' is not a number");
  }
  return value;
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view text) {
  text = trim(text);
  Int value{};
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("key '" + std::string(key) + "': '" + std::string(text) +
                      "' is not an integer");
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("key '" + std::string(key) + "': expected true or false");
}

}  // namespace

KeyValues parse_key_values(std::string_view text) {
  KeyValues kv;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": empty key");
    }
    kv[std::string(key)] = std::string(unquote(trim(line.substr(eq + 1))));
  }
  return kv;
}

KeyValues load_key_values(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open config file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_key_values(ss.str());
}

AxisSpec parse_axis(std::string_view text) {
  text = trim(text);
  const std::size_t c1 = text.find(':');
  if (c1 == std::string_view::npos) {
    const double v = parse_double("axis", text);
    return {v, v, 1};
  }
  const std::size_t c2 = text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw ConfigError("axis '" + std::string(text) +
                      "': expected min:max:count or a fixed value");
  }
  AxisSpec a;
  a.min = parse_double("axis", text.substr(0, c1));
  a.max = parse_double("axis", text.substr(c1 + 1, c2 - c1 - 1));
  a.count = parse_int<std::size_t>("axis", text.substr(c2 + 1));
  if (a.count == 1) a.max = a.min;
  return a;
}

void apply_key_values(RunConfig& cfg, const KeyValues& kv) {
  for (const auto& [key, value] : kv) {
    if (key == "scenario") {
      cfg.scenario = scenario_from_string(value);
    } else if (key == "beta") {
      cfg.params.beta = parse_double(key, value);
    } else if (key == "omega0") {
      cfg.params.omega0 = parse_double(key, value);
    } else if (key == "c") {
      cfg.params.c = parse_double(key, value);
    } else if (key == "a" || key == "exponent_a") {
      cfg.params.exponent_a = parse_double(key, value);
    } else if (key == "hbar") {
      cfg.params.hbar = parse_double(key, value);
    } else if (key == "ray_speed") {
      cfg.ray_speed = parse_double(key, value);
    } else if (key == "amplitude") {
      cfg.amplitude_mode = amplitude_mode_from_string(value);
    } else if (key == "x") {
      cfg.grid[AxisId::x] = parse_axis(value);
    } else if (key == "y") {
      cfg.grid[AxisId::y] = parse_axis(value);
    } else if (key == "z") {
      cfg.grid[AxisId::z] = parse_axis(value);
    } else if (key == "t") {
      cfg.grid[AxisId::t] = parse_axis(value);
    } else if (key == "seed") {
      cfg.seed = parse_int<std::uint64_t>(key, value);
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "format") {
      cfg.format = export_format_from_string(value);
    } else if (key == "workers") {
      cfg.workers = parse_int<unsigned>(key, value);
    } else if (key == "timestamp") {
      cfg.timestamp = parse_bool(key, value);
    } else if (key == "width") {
      cfg.image_width = parse_int<int>(key, value);
    } else if (key == "height") {
      cfg.image_height = parse_int<int>(key, value);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

WaveField make_field(const RunConfig& cfg) {
  cfg.validate();
  const Provenance prov = provenance_of(cfg.scenario);
  if (cfg.scenario == Scenario::ray || cfg.scenario == Scenario::generalized) {
    return WaveField(cfg.params, prov, cfg.effective_ray_speed());
  }
  return WaveField(cfg.params, prov, cfg.amplitude_mode);
}

namespace {

bool axis_hits_zero(const AxisSpec& a) {
  for (std::size_t i = 0; i < a.count; ++i) {
    if (a.coordinate(i) == 0.0) return true;
  }
  return false;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

}  // namespace

FieldGrid sample(const RunConfig& cfg) {
  const WaveField field = make_field(cfg);
  if (cfg.amplitude_mode == AmplitudeMode::inverse_r &&
      axis_hits_zero(cfg.grid[AxisId::x]) &&
      axis_hits_zero(cfg.grid[AxisId::y]) &&
      axis_hits_zero(cfg.grid[AxisId::z])) {
    throw SingularityError("inverse-r grid includes the origin r = 0");
  }
  FieldGrid grid = sample_field(field, cfg.grid, cfg.workers);
  grid.metadata.scenario = std::string(to_string(cfg.scenario));
  if (cfg.timestamp) grid.metadata.timestamp = utc_timestamp();
  return grid;
}

}  // namespace wavekin
