#include "wavekin/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"
#include "wavekin/analysis.hpp"
#include "wavekin/errors.hpp"
#include "wavekin/kinematics.hpp"
#include "wavekin/rayconstruct.hpp"
#include "wavekin/wavemodel.hpp"

namespace wavekin {

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::equivalence: return "equivalence";
    case Suite::speeds: return "speeds";
    case Suite::detectability: return "detectability";
    case Suite::quantization: return "quantization";
    case Suite::all: return "all";
  }
  return "unknown";
}

Suite suite_from_string(std::string_view tag) {
  for (auto s : {Suite::equivalence, Suite::speeds, Suite::detectability,
                 Suite::quantization, Suite::all}) {
    if (to_string(s) == tag) return s;
  }
  throw ConfigError("unknown verification suite '" + std::string(tag) + "'");
}

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.passed(); });
}

std::string VerifyReport::to_json() const {
  nlohmann::json doc;
  doc["seed"] = seed;
  doc["passed"] = passed();
  doc["suites"] = nlohmann::json::array();
  for (const auto& suite : suites) {
    nlohmann::json js{{"name", suite.name}, {"passed", suite.passed()}};
    js["checks"] = nlohmann::json::array();
    for (const auto& c : suite.checks) {
      js["checks"].push_back({{"name", c.name},
                              {"measured", c.measured},
                              {"tolerance", c.tolerance},
                              {"relation", c.relation},
                              {"passed", c.passed}});
    }
    doc["suites"].push_back(js);
  }
  return doc.dump(2) + "\n";
}

namespace {

Check below(std::string name, double measured, double tolerance) {
  return {std::move(name), measured, tolerance, "<", measured < tolerance};
}

Check above(std::string name, double measured, double threshold) {
  return {std::move(name), measured, threshold, ">", measured > threshold};
}

std::string tag(std::string_view prefix, double value) {
  std::ostringstream ss;
  ss << prefix << value;
  return ss.str();
}

SpacetimePoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  SpacetimePoint p;
  p.x = u(rng);
  p.y = u(rng);
  p.z = u(rng);
  p.t = u(rng);
  return p;
}

SuiteResult equivalence_suite(const VerifyOptions& opt) {
  SuiteResult r{"equivalence", {}};
  std::mt19937_64 rng(opt.seed);
  std::vector<double> betas{0.1, 0.3, 0.6, 0.9, 0.99};
  if (std::find(betas.begin(), betas.end(), opt.beta) == betas.end()) {
    betas.push_back(opt.beta);
  }
  for (double beta : betas) {
    const BoostParams params{.beta = beta};
    const FactorPair factors(params);
    double ray_dev = 0.0, factor_dev = 0.0;
    for (int i = 0; i < opt.random_points; ++i) {
      const SpacetimePoint p = random_point(rng);
      const double closed = boosted_closed_form(params, p);
      ray_dev = std::max(ray_dev, std::abs(interfere(params, p) - closed));
      factor_dev = std::max(
          factor_dev, std::abs(factors.carrier(p) * factors.modulation(p) - closed));
    }
    r.checks.push_back(below(tag("ray_vs_closed_form beta=", beta), ray_dev, 1e-9));
    r.checks.push_back(
        below(tag("factor_product_vs_closed_form beta=", beta), factor_dev, 1e-12));
  }

  // Galilean member of the family against its own ray construction.
  const BoostParams galilean{.beta = opt.beta, .exponent_a = 0.0};
  double dev = 0.0;
  for (int i = 0; i < opt.random_points; ++i) {
    const SpacetimePoint p = random_point(rng);
    dev = std::max(dev, std::abs(interfere(galilean, p) -
                                 generalized_closed_form(galilean, p)));
  }
  r.checks.push_back(below(tag("generalized_a0_vs_ray beta=", opt.beta), dev, 1e-9));
  return r;
}

SuiteResult speeds_suite(const VerifyOptions&) {
  SuiteResult r{"speeds", {}};
  for (double beta : {0.1, 0.5, 0.9}) {
    const BoostParams params{.beta = beta};
    const FrontSpeeds fs = measure_front_speeds(params);
    const double v = params.velocity();
    const double c2 = params.c * params.c;
    r.checks.push_back(below(tag("carrier_speed_rel_err beta=", beta),
                             std::abs(fs.carrier.fitted_speed / v - 1.0), 1e-6));
    r.checks.push_back(
        below(tag("modulation_speed_rel_err beta=", beta),
              std::abs(fs.modulation.fitted_speed / (c2 / v) - 1.0), 1e-6));
    r.checks.push_back(below(tag("speed_product_rel_err beta=", beta),
                             std::abs(fs.product / c2 - 1.0), 1e-5));
  }
  return r;
}

SuiteResult detectability_suite(const VerifyOptions&) {
  SuiteResult r{"detectability", {}};
  for (double a : {0.0, 0.5, 1.0, 2.0}) {
    const double defect = group_closure_defect(a, 0.5, 0.5);
    if (a == 1.0) {
      r.checks.push_back(below("closure_defect a=1", defect, 1e-12));
    } else {
      r.checks.push_back(above(tag("closure_defect a=", a), defect, 1e-3));
    }
  }
  double worst = 0.0;
  for (double beta : {-0.9, -0.5, 0.0, 0.1, 0.3, 0.6, 0.9, 0.99}) {
    const BoostParams params{.beta = beta};
    const RayPair rays = doppler_pair(params);
    const IsotropyFrame frame = isotropy_search(rays.omega1, rays.omega2, params);
    worst = std::max(worst, std::abs(frame.beta - beta));
  }
  r.checks.push_back(below("isotropy_roundtrip a=1", worst, 1e-10));
  return r;
}

SuiteResult quantization_suite(const VerifyOptions&) {
  SuiteResult r{"quantization", {}};
  constexpr std::size_t kSamples = 10000;
  const double radius = 1.0;
  const double kappa = de_broglie(BoostParams{.beta = 0.6}).kappa_dB;
  std::vector<Vec3> path(kSamples + 1);
  for (std::size_t i = 0; i <= kSamples; ++i) {
    const double th = kTwoPi * static_cast<double>(i % kSamples) / kSamples;
    path[i] = {radius * std::cos(th), radius * std::sin(th), 0.0};
  }
  const std::vector<double> profile(path.size(), kappa);
  const QuantizationResult q = bohr_path_integral(path, profile);
  const QuantizationResult exact = bohr_residual(kappa, kTwoPi * radius);
  r.checks.push_back(below("circle_integral_abs_err",
                           std::abs(q.loop_phase - exact.loop_phase), 1e-8));
  double recon = 0.0;
  for (double phase : {q.loop_phase, 0.0, 4.0 * kTwoPi / 2.0, 1.5 * kTwoPi,
                       123.456, 1e6 + 0.1}) {
    const QuantizationResult d = decompose_loop_phase(phase);
    recon = std::max(
        recon, std::abs(kTwoPi * static_cast<double>(d.nearest_n) + d.residual -
                        d.loop_phase));
  }
  r.checks.push_back({"reconstruction_bit_exact", recon, 0.0, "==", recon == 0.0});
  return r;
}

SuiteResult run_suite(Suite s, const VerifyOptions& opt) {
  switch (s) {
    case Suite::equivalence: return equivalence_suite(opt);
    case Suite::speeds: return speeds_suite(opt);
    case Suite::detectability: return detectability_suite(opt);
    case Suite::quantization: return quantization_suite(opt);
    case Suite::all: break;
  }
  throw ConfigError("suite 'all' is not a single suite");
}

}  // namespace

VerifyReport verify(Suite suite, const VerifyOptions& options) {
  std::vector<Suite> selected;
  if (suite == Suite::all) {
    selected = {Suite::equivalence, Suite::speeds, Suite::detectability,
                Suite::quantization};
  } else {
    selected = {suite};
  }
  std::vector<std::future<SuiteResult>> pending;
  for (Suite s : selected) {
    pending.push_back(std::async(std::launch::async, run_suite, s, options));
  }
  VerifyReport report;
  report.seed = options.seed;
  for (auto& f : pending) report.suites.push_back(f.get());
  std::sort(report.suites.begin(), report.suites.end(),
            [](const SuiteResult& a, const SuiteResult& b) { return a.name < b.name; });
  return report;
}

}  // namespace wavekin
