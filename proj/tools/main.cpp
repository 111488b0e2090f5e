// wavekin: sample, render, verify and measure the boosted standing-wave
// particle from the command line.
//
// Exit status: 0 success, 1 verification failure, 2 configuration error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wavekin/analysis.hpp"
#include "wavekin/config.hpp"
#include "wavekin/errors.hpp"
#include "wavekin/export.hpp"
#include "wavekin/render.hpp"
#include "wavekin/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;

struct Overrides {
  std::string config;
  double beta = 0.0, omega0 = 0.0, c = 0.0, a = 0.0, hbar = 0.0;
  double ray_speed = 0.0;
  std::uint64_t seed = 0;
  std::string out, format, scenario, amplitude;
  std::string x, y, z, t;
  unsigned workers = 0;
  bool no_timestamp = false;
  int width = 0, height = 0;
};

struct Options {
  CLI::Option* beta = nullptr;
  CLI::Option* omega0 = nullptr;
  CLI::Option* c = nullptr;
  CLI::Option* a = nullptr;
  CLI::Option* hbar = nullptr;
  CLI::Option* ray_speed = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* format = nullptr;
  CLI::Option* config = nullptr;
};

void add_grid_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--scenario", o.scenario, "rest | boosted | ray | generalized");
  cmd->add_option("--amplitude", o.amplitude, "unit | inverse-r (rest only)");
  cmd->add_option("--x", o.x, "x axis as min:max:count or a fixed value");
  cmd->add_option("--y", o.y, "y axis as min:max:count or a fixed value");
  cmd->add_option("--z", o.z, "z axis as min:max:count or a fixed value");
  cmd->add_option("--t", o.t, "t axis as min:max:count or a fixed value");
  cmd->add_option("--workers", o.workers, "sampling threads (0 = all cores)");
  cmd->add_flag("--no-timestamp", o.no_timestamp,
                "omit the generation timestamp (byte-identical reruns)");
}

// Defaults, then the config file, then command line flags.
wavekin::RunConfig build_config(const Overrides& o, const Options& opt,
                                const CLI::App& cmd) {
  wavekin::RunConfig cfg;
  if (opt.config->count() > 0) {
    wavekin::apply_key_values(cfg, wavekin::load_key_values(o.config));
  }
  if (opt.beta->count()) cfg.params.beta = o.beta;
  if (opt.omega0->count()) cfg.params.omega0 = o.omega0;
  if (opt.c->count()) cfg.params.c = o.c;
  if (opt.a->count()) cfg.params.exponent_a = o.a;
  if (opt.hbar->count()) cfg.params.hbar = o.hbar;
  if (opt.ray_speed->count()) cfg.ray_speed = o.ray_speed;
  if (opt.seed->count()) cfg.seed = o.seed;
  if (opt.out->count()) cfg.out = o.out;
  if (opt.format->count()) cfg.format = wavekin::export_format_from_string(o.format);

  const auto given = [&](const char* name) {
    const CLI::Option* option = cmd.get_option_no_throw(name);
    return option != nullptr && option->count() > 0;
  };
  if (given("--scenario")) cfg.scenario = wavekin::scenario_from_string(o.scenario);
  if (given("--amplitude")) {
    cfg.amplitude_mode = wavekin::amplitude_mode_from_string(o.amplitude);
  }
  if (given("--x")) cfg.grid[wavekin::AxisId::x] = wavekin::parse_axis(o.x);
  if (given("--y")) cfg.grid[wavekin::AxisId::y] = wavekin::parse_axis(o.y);
  if (given("--z")) cfg.grid[wavekin::AxisId::z] = wavekin::parse_axis(o.z);
  if (given("--t")) cfg.grid[wavekin::AxisId::t] = wavekin::parse_axis(o.t);
  if (given("--workers")) cfg.workers = o.workers;
  if (o.no_timestamp) cfg.timestamp = false;
  if (given("--width")) cfg.image_width = o.width;
  if (given("--height")) cfg.image_height = o.height;
  cfg.validate();
  return cfg;
}

void emit(const std::string& text, const std::filesystem::path& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    wavekin::write_text_file(out, text);
  }
}

std::string sweep_table(const std::vector<wavekin::DetectabilityReport>& rows,
                        wavekin::ExportFormat format) {
  if (format == wavekin::ExportFormat::json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : rows) {
      doc.push_back({{"a", r.exponent_a},
                     {"beta1", r.beta1},
                     {"beta2", r.beta2},
                     {"closure_defect", r.closure_defect},
                     {"isotropy_frame_beta", r.isotropy_frame_beta},
                     {"isotropy_common_omega", r.isotropy_common_omega},
                     {"anisotropy_flag", r.anisotropy_flag}});
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream ss;
  ss.precision(17);
  ss << "a,beta1,beta2,closure_defect,isotropy_frame_beta,"
        "isotropy_common_omega,anisotropy_flag\n";
  for (const auto& r : rows) {
    ss << r.exponent_a << ',' << r.beta1 << ',' << r.beta2 << ','
       << r.closure_defect << ',' << r.isotropy_frame_beta << ','
       << r.isotropy_common_omega << ',' << (r.anisotropy_flag ? 1 : 0) << '\n';
  }
  return ss.str();
}

nlohmann::json trace_json(const wavekin::FrontTrace& trace) {
  return {{"times", trace.times},
          {"positions", trace.positions},
          {"fitted_speed", trace.fitted_speed},
          {"fit_residual", trace.fit_residual}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wavekin: boosted standing-wave particle toolkit"};
  app.require_subcommand(1);

  Overrides o;
  Options opt;
  opt.beta = app.add_option("--beta", o.beta, "velocity fraction v/c");
  opt.omega0 = app.add_option("--omega0", o.omega0, "natural rest frequency");
  opt.c = app.add_option("--c", o.c, "wave speed");
  opt.a = app.add_option("--a", o.a, "transform exponent (gamma^a family)");
  opt.hbar = app.add_option("--hbar", o.hbar, "action scale");
  opt.ray_speed = app.add_option("--ray-speed", o.ray_speed, "ray speed C");
  opt.seed = app.add_option("--seed", o.seed, "seed for randomized checks");
  opt.config = app.add_option("--config", o.config, "key = value config file");
  opt.out = app.add_option("--out", o.out, "output path (stdout if omitted)");
  opt.format = app.add_option("--format", o.format, "csv | json");
  for (CLI::Option* option : app.get_options()) {
    if (option->get_name() != "--help") option->configurable(false);
  }

  CLI::App* sample_cmd = app.add_subcommand("sample", "sample a field on a grid");
  add_grid_options(sample_cmd, o);

  CLI::App* render_cmd =
      app.add_subcommand("render", "sample a field and write a PPM image");
  add_grid_options(render_cmd, o);
  std::string style = "heatmap";
  render_cmd->add_option("--style", style, "heatmap | line-snapshots");
  render_cmd->add_option("--width", o.width, "image width (default 1024)");
  render_cmd->add_option("--height", o.height, "image height (default 768)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run property suites");
  std::string suite = "all";
  int points = 1000;
  verify_cmd->add_option("suite", suite,
                         "equivalence | speeds | detectability | quantization | all");
  verify_cmd->add_option("--points", points, "random points per check");

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "closure defect over exponents and velocities");
  std::vector<double> exponents{0.0, 0.5, 1.0, 2.0};
  std::vector<double> betas{0.1, 0.3, 0.5, 0.7, 0.9};
  unsigned sweep_workers = 0;
  sweep_cmd->add_option("--exponents", exponents, "transform exponents a")
      ->delimiter(',');
  sweep_cmd->add_option("--betas", betas, "velocity fractions")->delimiter(',');
  sweep_cmd->add_option("--workers", sweep_workers, "threads (0 = all cores)");

  CLI::App* track_cmd =
      app.add_subcommand("track", "measure carrier and modulation front speeds");
  double duration = 1.0;
  int samples = 21;
  track_cmd->add_option("--duration", duration, "tracked time span");
  track_cmd->add_option("--samples", samples, "sample times (>= 3)");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (sample_cmd->parsed()) {
      const wavekin::RunConfig cfg = build_config(o, opt, *sample_cmd);
      const wavekin::FieldGrid grid = wavekin::sample(cfg);
      emit(cfg.format == wavekin::ExportFormat::csv ? wavekin::to_csv(grid)
                                                    : wavekin::to_json(grid),
           cfg.out);
      return 0;
    }
    if (render_cmd->parsed()) {
      const wavekin::RunConfig cfg = build_config(o, opt, *render_cmd);
      if (cfg.out.empty()) throw wavekin::ConfigError("render needs --out <file.ppm>");
      const auto render_style = wavekin::render_style_from_string(style);
      const wavekin::FieldGrid grid = wavekin::sample(cfg);
      wavekin::render_to_file(grid, render_style, cfg.out, cfg.image_width,
                              cfg.image_height);
      return 0;
    }
    if (verify_cmd->parsed()) {
      const wavekin::RunConfig cfg = build_config(o, opt, *verify_cmd);
      wavekin::VerifyOptions vo;
      vo.seed = cfg.seed;
      vo.beta = cfg.params.beta;
      vo.random_points = points;
      if (points < 1) throw wavekin::ConfigError("--points must be positive");
      const wavekin::VerifyReport report =
          wavekin::verify(wavekin::suite_from_string(suite), vo);
      emit(report.to_json(), cfg.out);
      return report.passed() ? 0 : kExitVerifyFailed;
    }
    if (sweep_cmd->parsed()) {
      const wavekin::RunConfig cfg = build_config(o, opt, *sweep_cmd);
      const auto rows = wavekin::detectability_sweep(exponents, betas,
                                                     cfg.params, sweep_workers);
      emit(sweep_table(rows, cfg.format), cfg.out);
      return 0;
    }
    if (track_cmd->parsed()) {
      const wavekin::RunConfig cfg = build_config(o, opt, *track_cmd);
      const wavekin::FrontSpeeds fs =
          wavekin::measure_front_speeds(cfg.params, duration, samples);
      const nlohmann::json doc{{"beta", cfg.params.beta},
                               {"c", cfg.params.c},
                               {"carrier", trace_json(fs.carrier)},
                               {"modulation", trace_json(fs.modulation)},
                               {"speed_product", fs.product}};
      emit(doc.dump(2) + "\n", cfg.out);
      return 0;
    }
  } catch (const wavekin::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const wavekin::DomainError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const wavekin::SingularityError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
