#include "wavekin/export.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "wavekin/errors.hpp"

namespace wavekin {

namespace {

constexpr std::string_view kFormatTag = "wavekin-field-grid";

void append_number(std::string& out, double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::general, 17);
  out.append(buf, res.ptr);
}

std::string number(double value) {
  std::string s;
  append_number(s, value);
  return s;
}

double to_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("cannot parse " + std::string(what) + " '" +
                      std::string(text) + "'");
  }
  return value;
}

std::string axis_text(const AxisSpec& a) {
  return number(a.min) + ":" + number(a.max) + ":" + std::to_string(a.count);
}

void check_shape(const FieldGrid& grid) {
  grid.spec.validate();
  if (grid.values.size() != grid.spec.point_count()) {
    throw ConfigError("grid has " + std::to_string(grid.values.size()) +
                      " values but its axes describe " +
                      std::to_string(grid.spec.point_count()));
  }
}

}  // namespace

std::string to_csv(const FieldGrid& grid) {
  check_shape(grid);
  const GridMetadata& m = grid.metadata;
  std::string out;
  out += "# format=";
  out += kFormatTag;
  out += "\n# scenario=" + m.scenario;
  out += "\n# provenance=" + std::string(to_string(m.provenance));
  out += "\n# amplitude=" + std::string(to_string(m.amplitude_mode));
  out += "\n# beta=" + number(m.params.beta);
  out += "\n# c=" + number(m.params.c);
  out += "\n# omega0=" + number(m.params.omega0);
  out += "\n# a=" + number(m.params.exponent_a);
  out += "\n# hbar=" + number(m.params.hbar);
  out += "\n# ray_speed=" + number(m.ray_speed);
  if (m.timestamp) out += "\n# timestamp=" + *m.timestamp;
  for (AxisId id : kAllAxes) {
    out += "\n# axis.";
    out += axis_name(id);
    out += "=" + axis_text(grid.spec[id]);
  }
  out += "\nx,y,z,t,psi\n";
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    const SpacetimePoint p = grid.point(i);
    for (double coord : {p.x, p.y, p.z, p.t}) {
      append_number(out, coord);
      out += ',';
    }
    append_number(out, grid.values[i]);
    out += '\n';
  }
  return out;
}

std::string to_json(const FieldGrid& grid) {
  check_shape(grid);
  const GridMetadata& m = grid.metadata;
  nlohmann::json meta{
      {"scenario", m.scenario},
      {"provenance", to_string(m.provenance)},
      {"amplitude", to_string(m.amplitude_mode)},
      {"beta", m.params.beta},
      {"c", m.params.c},
      {"omega0", m.params.omega0},
      {"a", m.params.exponent_a},
      {"hbar", m.params.hbar},
      {"ray_speed", m.ray_speed},
  };
  if (m.timestamp) meta["timestamp"] = *m.timestamp;

  nlohmann::json axes = nlohmann::json::array();
  for (AxisId id : kAllAxes) {
    const AxisSpec& a = grid.spec[id];
    axes.push_back(
        {{"name", axis_name(id)}, {"min", a.min}, {"max", a.max}, {"count", a.count}});
  }
  nlohmann::json doc{{"format", kFormatTag},
                     {"layout", "row-major t,z,y,x (x fastest)"},
                     {"metadata", meta},
                     {"axes", axes},
                     {"values", grid.values}};
  return doc.dump(1) + "\n";
}

FieldGrid from_csv(std::string_view text) {
  FieldGrid grid;
  GridMetadata& m = grid.metadata;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      line.remove_prefix(1);
      while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) continue;
      const std::string_view key = line.substr(0, eq);
      const std::string_view val = line.substr(eq + 1);
      if (key == "format" && val != kFormatTag) {
        throw ConfigError("not a wavekin field grid CSV");
      } else if (key == "scenario") {
        m.scenario = val;
      } else if (key == "provenance") {
        m.provenance = provenance_from_string(val);
      } else if (key == "amplitude") {
        m.amplitude_mode = amplitude_mode_from_string(val);
      } else if (key == "beta") {
        m.params.beta = to_double(val, key);
      } else if (key == "c") {
        m.params.c = to_double(val, key);
      } else if (key == "omega0") {
        m.params.omega0 = to_double(val, key);
      } else if (key == "a") {
        m.params.exponent_a = to_double(val, key);
      } else if (key == "hbar") {
        m.params.hbar = to_double(val, key);
      } else if (key == "ray_speed") {
        m.ray_speed = to_double(val, key);
      } else if (key == "timestamp") {
        m.timestamp = std::string(val);
      } else if (key.starts_with("axis.") && key.size() == 6) {
        const char name = key[5];
        const AxisSpec a = parse_axis(val);
        for (AxisId id : kAllAxes) {
          if (axis_name(id)[0] == name) grid.spec[id] = a;
        }
      }
      continue;
    }
    if (!header_seen) {
      if (line != "x,y,z,t,psi") {
        throw ConfigError("CSV line " + std::to_string(line_no) +
                          ": expected header x,y,z,t,psi");
      }
      header_seen = true;
      grid.values.reserve(grid.spec.point_count());
      continue;
    }
    const std::size_t last = line.rfind(',');
    if (last == std::string_view::npos) {
      throw ConfigError("CSV line " + std::to_string(line_no) +
                        ": malformed row");
    }
    grid.values.push_back(to_double(line.substr(last + 1), "value"));
  }
  if (!header_seen) throw ConfigError("CSV has no header row");
  check_shape(grid);
  return grid;
}

FieldGrid from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("format").get<std::string>() != kFormatTag) {
      throw ConfigError("not a wavekin field grid JSON document");
    }
    FieldGrid grid;
    const auto& meta = doc.at("metadata");
    GridMetadata& m = grid.metadata;
    m.scenario = meta.at("scenario").get<std::string>();
    m.provenance = provenance_from_string(meta.at("provenance").get<std::string>());
    m.amplitude_mode =
        amplitude_mode_from_string(meta.at("amplitude").get<std::string>());
    m.params.beta = meta.at("beta").get<double>();
    m.params.c = meta.at("c").get<double>();
    m.params.omega0 = meta.at("omega0").get<double>();
    m.params.exponent_a = meta.at("a").get<double>();
    m.params.hbar = meta.at("hbar").get<double>();
    m.ray_speed = meta.at("ray_speed").get<double>();
    if (meta.contains("timestamp")) {
      m.timestamp = meta.at("timestamp").get<std::string>();
    }
    for (const auto& a : doc.at("axes")) {
      const std::string name = a.at("name").get<std::string>();
      for (AxisId id : kAllAxes) {
        if (name == axis_name(id)) {
          grid.spec[id] = {a.at("min").get<double>(), a.at("max").get<double>(),
                           a.at("count").get<std::size_t>()};
        }
      }
    }
    grid.values = doc.at("values").get<std::vector<double>>();
    check_shape(grid);
    return grid;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed field grid JSON: ") + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "read failed");
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

void export_grid(const FieldGrid& grid, const std::filesystem::path& path,
                 ExportFormat format) {
  write_text_file(path, format == ExportFormat::csv ? to_csv(grid)
                                                    : to_json(grid));
}

FieldGrid import_grid(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  return path.extension() == ".json" ? from_json(text) : from_csv(text);
}

}  // namespace wavekin
