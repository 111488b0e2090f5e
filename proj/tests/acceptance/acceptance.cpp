// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances and runtime budgets are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wavekin/analysis.hpp"
#include "wavekin/config.hpp"
#include "wavekin/export.hpp"
#include "wavekin/grid.hpp"
#include "wavekin/rayconstruct.hpp"
#include "wavekin/render.hpp"
#include "wavekin/wavemodel.hpp"

using namespace wavekin;
using oracle::kPi;

namespace {

constexpr std::uint64_t kSeed = 20260917;

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

SpacetimePoint to_point(const oracle::Event& e) { return {e.x, e.y, e.z, e.t}; }

double rel(double measured, double expected) {
  return std::abs(measured / expected - 1.0);
}

Outcome construction_equivalence() {
  double worst = 0.0;
  std::uint64_t seed = kSeed;
  for (double beta : {0.1, 0.3, 0.6, 0.9, 0.99}) {
    const BoostParams p{.beta = beta};
    for (const auto& e : oracle::random_events(1000, seed++)) {
      const SpacetimePoint q = to_point(e);
      worst = std::max(worst, std::abs(interfere(p, q) - boosted_closed_form(p, q)));
    }
  }
  return {worst < 1e-9, fmt("max |ray - closed form| = %.3e (tol 1e-9)", worst)};
}

Outcome factor_identity() {
  const BoostParams p{.beta = 0.6};
  const FactorPair f(p);
  double worst = 0.0;
  for (int it = 0; it < 3; ++it) {
    for (int iy = 0; iy < 100; ++iy) {
      for (int ix = 0; ix < 100; ++ix) {
        const SpacetimePoint q{-10.0 + 20.0 * ix / 99.0, -10.0 + 20.0 * iy / 99.0, 0.0,
                               1.0 * it};
        worst = std::max(worst,
                         std::abs(f.carrier(q) * f.modulation(q) - boosted_closed_form(p, q)));
      }
    }
  }
  return {worst < 1e-12, fmt("max |carrier*modulation - field| = %.3e (tol 1e-12)", worst)};
}

Outcome front_speeds() {
  double worst_c = 0.0, worst_m = 0.0, worst_p = 0.0;
  for (double beta : {0.1, 0.5, 0.9}) {
    const BoostParams p{.beta = beta};
    const FrontSpeeds fs = measure_front_speeds(p);
    const double v = p.velocity();
    worst_c = std::max(worst_c, rel(fs.carrier.fitted_speed, v));
    worst_m = std::max(worst_m, rel(fs.modulation.fitted_speed, p.c * p.c / v));
    worst_p = std::max(worst_p, rel(fs.product, p.c * p.c));
  }
  const bool ok = worst_c < 1e-6 && worst_m < 1e-6 && worst_p < 1e-5;
  return {ok, fmt("carrier rel %.2e", worst_c) + fmt(", modulation rel %.2e", worst_m) +
                  fmt(", product rel %.2e (tol 1e-6/1e-6/1e-5)", worst_p)};
}

Outcome de_broglie_relations() {
  const BoostParams p{.beta = 0.6};
  const FactorPair f(p);
  const double g = 1.0 / std::sqrt(1.0 - 0.36);
  const double k = measure_wavenumber(f, 0.3, {-30.0, 30.0});
  const double w = measure_frequency(f, 0.7, {0.0, 30.0});
  const double ek = rel(k, g * p.kappa0() * p.beta);
  const double ew = rel(w, g * p.omega0);
  return {ek < 1e-6 && ew < 1e-6,
          fmt("wavenumber rel %.2e", ek) + fmt(", frequency rel %.2e (tol 1e-6)", ew)};
}

Outcome rest_limit() {
  const BoostParams p{};
  bool exact = true;
  double composed = 0.0, ray = 0.0;
  bool uniform = true;
  const FactorPair f(p);
  for (const auto& e : oracle::random_events(2000, kSeed + 50)) {
    const SpacetimePoint q = to_point(e);
    const double one_d_rest = std::sin(p.kappa0() * e.x) * std::cos(p.omega0 * e.t);
    exact = exact && one_d_travelling(p, e.x, e.t) == one_d_rest;
    exact = exact && boosted_closed_form(p, q) == rest_amplitude(p, q);
    composed = std::max(composed, std::abs(one_d_composed(p, e.x, e.t) - one_d_rest));
    ray = std::max(ray, std::abs(interfere(p, q) - rest_amplitude(p, q)));
    uniform = uniform && f.modulation(q) == f.modulation({0.0, 0.0, 0.0, e.t});
  }
  const bool ok = exact && uniform && composed < 1e-12 && ray < 1e-12;
  return {ok, std::string("closed forms bit-exact: ") + (exact ? "yes" : "no") +
                  fmt(", composed %.2e", composed) + fmt(", ray %.2e (tol 1e-12)", ray) +
                  ", modulation uniform: " + (uniform ? "yes" : "no")};
}

Outcome retardation() {
  const BoostParams p{.beta = 0.6};
  const double v = p.velocity();
  double worst = 0.0;
  for (const auto& e : oracle::random_events(10000, kSeed + 60)) {
    const RetardationTimes rt = retardation_times(p, to_point(e));
    const double rho2 = e.y * e.y + e.z * e.z;
    const double a1 = e.x - v * (e.t - rt.t1);
    const double a2 = e.x - v * (e.t + rt.t2);
    const auto r = [](double l, double rr) {
      return std::abs(l - rr) / std::max({std::abs(l), std::abs(rr), 1e-300});
    };
    worst = std::max({worst, r(p.c * p.c * rt.t1 * rt.t1, a1 * a1 + rho2),
                      r(p.c * p.c * rt.t2 * rt.t2, a2 * a2 + rho2)});
  }
  return {worst < 1e-10, fmt("max relative residual %.2e (tol 1e-10)", worst)};
}

Outcome detectability() {
  const double lorentz = group_closure_defect(1.0, 0.5, 0.5);
  double smallest_other = 1.0;
  for (double a : {0.0, 0.5, 2.0}) {
    smallest_other = std::min(smallest_other, group_closure_defect(a, 0.5, 0.5));
  }
  double trip = 0.0;
  for (double beta : {-0.9, -0.5, 0.0, 0.3, 0.6, 0.95}) {
    const BoostParams p{.beta = beta, .omega0 = 1.3};
    const RayPair r = doppler_pair(p);
    trip = std::max(trip, std::abs(isotropy_search(r.omega1, r.omega2, p).beta - beta));
  }
  const bool ok = lorentz < 1e-12 && smallest_other > 1e-3 && trip < 1e-10;
  return {ok, fmt("a=1 defect %.2e", lorentz) + fmt(", min other %.3f", smallest_other) +
                  fmt(", isotropy round trip %.2e", trip)};
}

Outcome ray_speed_generalization() {
  const BoostParams p{.beta = 0.6};
  const double C = 2.0;
  const double gamma = 1.0 / std::sqrt(1.0 - 0.36);
  const double gamma_c = 1.0 / std::sqrt(1.0 - 0.09);
  const double scale = envelope_scales(p, C).longitudinal;

  // Measured: zeros of the ray-difference envelope along x, in units of
  // pi / kappa_C.
  const auto envelope = [&](double x) {
    const SpacetimePoint q{x, 0.0, 0.0, 0.0};
    const RetardationTimes rt = retardation_times(p, C, q);
    const double pa = ray_phase_at_emission(p, C, 0.0, rt.t1);
    const double pc = ray_phase_at_absorption(p, C, 0.0, rt.t2);
    return std::sin(0.5 * (pc - pa));
  };
  const auto zeros = oracle::scan_zeros(envelope, 0.5, 40.0);
  double measured = 0.0;
  if (zeros.size() >= 2) {
    measured = (zeros.back() - zeros.front()) / double(zeros.size() - 1) /
               (kPi * C / p.omega0);
  }
  const double er = rel(scale, 1.0 / gamma_c);
  const double em = rel(measured, 1.0 / gamma_c);
  const double gap = rel(scale, 1.0 / gamma);
  const bool ok = er < 1e-12 && em < 1e-9 && gap > 0.10;
  return {ok, fmt("scale %.6f", scale) + fmt(" vs 1/gamma_C %.6f", 1.0 / gamma_c) +
                  fmt(", measured rel %.2e", em) + fmt(", differs from 1/gamma by %.1f%%", 100 * gap)};
}

Outcome quantization() {
  double worst = 0.0;
  bool exact = true;
  for (double radius : {0.5, 1.0, 7.0}) {
    const std::size_t n = 10000;
    std::vector<Vec3> path(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      const double th = 2.0 * kPi * double(i % n) / double(n);
      path[i] = {radius * std::cos(th), radius * std::sin(th), 0.0};
    }
    const std::vector<double> kappa(path.size(), 0.75);
    const auto q = bohr_path_integral(path, kappa);
    worst = std::max(worst, std::abs(q.loop_phase - 0.75 * 2.0 * kPi * radius));
    exact = exact && kTwoPi * double(q.nearest_n) + q.residual == q.loop_phase;
  }
  return {worst < 1e-8 && exact, fmt("max |loop - kappa 2 pi R| = %.2e (tol 1e-8)", worst) +
                                     ", reconstruction exact: " + (exact ? "yes" : "no")};
}

Outcome harness_determinism() {
  RunConfig cfg;
  cfg.timestamp = false;
  cfg.grid[AxisId::t] = {0.0, 2.0, 3};
  const std::string first = to_csv(sample(cfg));
  const std::string second = to_csv(sample(cfg));

  const WaveField field = make_field(cfg);
  const FieldGrid serial = sample_field(field, cfg.grid, 1);
  const FieldGrid parallel = sample_field(field, cfg.grid, 8);

  RunConfig ray = cfg;
  ray.scenario = Scenario::ray;
  ray.timestamp = true;
  const FieldGrid g = sample(ray);
  const bool csv_trip = from_csv(to_csv(g)).values == g.values;
  const bool json_trip = from_json(to_json(g)).values == g.values;

  // Figure artifacts: rest and boosted heatmaps, and the travelling snapshots.
  const std::filesystem::path dir = "acceptance_figures";
  std::filesystem::create_directories(dir);
  RunConfig rest;
  rest.scenario = Scenario::rest;
  rest.params = BoostParams{};
  rest.timestamp = false;
  render_to_file(sample(rest), RenderStyle::heatmap, dir / "rest_heatmap.ppm");
  RunConfig moving;
  moving.timestamp = false;
  render_to_file(sample(moving), RenderStyle::heatmap, dir / "boosted_heatmap.ppm");
  RunConfig snaps;
  snaps.timestamp = false;
  snaps.grid = GridSpec{};
  snaps.grid[AxisId::x] = {-10.0, 20.0, 1201};
  snaps.grid[AxisId::t] = {0.0, 2.0, 3};
  render_to_file(sample(snaps), RenderStyle::line_snapshots, dir / "snapshots.ppm");

  const bool ok =
      first == second && serial.values == parallel.values && csv_trip && json_trip;
  return {ok, std::string("repeat ") + (first == second ? "identical" : "DIFFERS") +
                  ", parallel " + (serial.values == parallel.values ? "identical" : "DIFFERS") +
                  ", csv " + (csv_trip ? "exact" : "LOSSY") + ", json " +
                  (json_trip ? "exact" : "LOSSY") + ", figures in " + dir.string()};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 means no runtime limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "construction equivalence", 1.0, construction_equivalence},
      {2, "factor identity", 1.0, factor_identity},
      {3, "front speeds", 5.0, front_speeds},
      {4, "de Broglie relations", 0.0, de_broglie_relations},
      {5, "rest-limit degeneration", 0.0, rest_limit},
      {6, "retardation consistency", 0.0, retardation},
      {7, "detectability", 1.0, detectability},
      {8, "ray-speed generalization", 0.0, ray_speed_generalization},
      {9, "quantization", 0.0, quantization},
      {10, "harness determinism", 0.0, harness_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool passed = out.passed;
    std::string timing = fmt(" [%.3f s", seconds);
    if (c.budget_seconds > 0.0) {
      timing += fmt(" / %.0f s budget", c.budget_seconds);
      passed = passed && seconds < c.budget_seconds;
    }
    timing += "]";
    std::printf("%s %2d %s: %s%s\n", passed ? "PASS" : "FAIL", c.id, c.name,
                out.detail.c_str(), timing.c_str());
    if (!passed) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
