#include "wavekin/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <string>
#include <thread>

#include "wavekin/errors.hpp"

namespace wavekin {

namespace {

bool opposite_signs(double a, double b) {
  return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0);
}

}  // namespace

double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!opposite_signs(flo, fhi)) {
    throw FeatureNotFound("no sign change on [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  }
  for (;;) {
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (opposite_signs(flo, fm)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return lo + 0.5 * (hi - lo);
}

std::vector<double> find_zeros(const std::function<double(double)>& f,
                               Window window, int scan_count) {
  if (scan_count < 2 || !(window.max > window.min)) {
    throw FeatureNotFound("empty search window");
  }
  const auto n = static_cast<std::size_t>(scan_count);
  std::vector<double> xs(n + 1), fs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    xs[i] = std::lerp(window.min, window.max,
                      static_cast<double>(i) / static_cast<double>(n));
    fs[i] = f(xs[i]);
  }
  std::vector<double> zeros;
  for (std::size_t i = 0; i < n; ++i) {
    if (opposite_signs(fs[i], fs[i + 1])) {
      zeros.push_back(bisect_root(f, xs[i], xs[i + 1]));
    } else if (fs[i + 1] == 0.0 && i + 2 <= n &&
               opposite_signs(fs[i], fs[i + 2])) {
      // Sample landed exactly on a crossing.
      zeros.push_back(xs[i + 1]);
    }
  }
  return zeros;
}

LinearFit fit_line(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw DegenerateFit("fit needs equally many abscissae and ordinates");
  }
  if (xs.size() < 3) throw DegenerateFit("fit needs at least 3 samples");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw DegenerateFit("fit abscissae are all equal");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.slope * xs[i] + fit.intercept);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / n);
  return fit;
}

FrontTrace track_zero(const std::function<double(double, double)>& profile,
                      Window x_window, std::span<const double> times,
                      std::optional<double> initial_guess) {
  if (times.size() < 3) throw DegenerateFit("tracking needs >= 3 sample times");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw DegenerateFit("sample times must be strictly increasing");
    }
  }

  FrontTrace trace;
  trace.times.assign(times.begin(), times.end());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    const auto zeros =
        find_zeros([&](double x) { return profile(x, t); }, x_window);
    if (zeros.empty()) {
      throw FeatureNotFound("no front in x window at t = " + std::to_string(t));
    }
    double expected =
        initial_guess.value_or(0.5 * (x_window.min + x_window.max));
    const auto& pos = trace.positions;
    if (i == 1) {
      expected = pos[0];
    } else if (i >= 2) {
      const double rate = (pos[i - 1] - pos[i - 2]) / (times[i - 1] - times[i - 2]);
      expected = pos[i - 1] + rate * (t - times[i - 1]);
    }
    const auto nearest = std::min_element(
        zeros.begin(), zeros.end(), [&](double a, double b) {
          return std::abs(a - expected) < std::abs(b - expected);
        });
    trace.positions.push_back(*nearest);
  }

  const LinearFit fit = fit_line(trace.times, trace.positions);
  trace.fitted_speed = fit.slope;
  trace.fit_residual = fit.rms_residual;
  return trace;
}

FrontTrace track_front(const FactorPair& factors, Window x_window,
                       std::span<const double> times, FrontTarget target,
                       std::optional<double> initial_guess) {
  if (target == FrontTarget::carrier_node) {
    return track_zero(
        [&](double x, double t) { return factors.carrier({x, 0.0, 0.0, t}); },
        x_window, times, initial_guess);
  }
  if (factors.params().beta == 0.0) {
    throw FeatureNotFound("the modulation has no moving front at rest");
  }
  return track_zero(
      [&](double x, double t) { return factors.modulation({x, 0.0, 0.0, t}); },
      x_window, times, initial_guess);
}

FrontSpeeds measure_front_speeds(const BoostParams& params, double duration,
                                 int samples) {
  params.validate();
  if (params.beta == 0.0) {
    throw FeatureNotFound("front speeds need a moving particle (beta != 0)");
  }
  if (samples < 3 || !(duration > 0.0)) {
    throw DegenerateFit("front tracking needs >= 3 samples over a positive span");
  }
  std::vector<double> times(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    times[i] = duration * i / (samples - 1);
  }
  const FactorPair factors(params);
  const double v = params.velocity();
  const double c = params.c;
  const double s = scale_factor(params.beta, params.exponent_a);
  constexpr double kPi = kTwoPi / 2.0;

  // Carrier nodes sit at |x - v t| = n pi / (s kappa0); seed at n = 1 ahead.
  const double node_spacing = kPi / (s * params.kappa0());
  const double node0 = std::copysign(node_spacing, v);
  const double node_end = node0 + v * duration;
  const Window carrier_window{std::min(node0, node_end) - 0.5 * node_spacing,
                              std::max(node0, node_end) + 0.5 * node_spacing};

  // Modulation zeros: s omega0 (t - v x / c^2) = -pi / 2 at x0 (t = 0).
  const double phase_speed = c * c / v;
  const double zero_spacing = std::abs(phase_speed) * kPi / (s * params.omega0);
  const double zero0 = phase_speed * kPi / (2.0 * s * params.omega0);
  const double zero_end = zero0 + phase_speed * duration;
  const Window modulation_window{
      std::min(zero0, zero_end) - 0.5 * zero_spacing,
      std::max(zero0, zero_end) + 0.5 * zero_spacing};

  FrontSpeeds out;
  out.carrier = track_front(factors, carrier_window, times,
                            FrontTarget::carrier_node, node0);
  out.modulation = track_front(factors, modulation_window, times,
                               FrontTarget::modulation_crest, zero0);
  out.product = out.carrier.fitted_speed * out.modulation.fitted_speed;
  return out;
}

namespace {

double pi_over_mean_spacing(const std::vector<double>& zeros) {
  if (zeros.size() < 2) {
    throw FeatureNotFound("need at least two zeros to measure a spacing");
  }
  const double spacing =
      (zeros.back() - zeros.front()) / static_cast<double>(zeros.size() - 1);
  return kTwoPi / 2.0 / spacing;
}

}  // namespace

double measure_wavenumber(const FactorPair& factors, double t,
                          Window x_window) {
  return pi_over_mean_spacing(find_zeros(
      [&](double x) { return factors.modulation({x, 0.0, 0.0, t}); },
      x_window));
}

double measure_frequency(const FactorPair& factors, double x,
                         Window t_window) {
  return pi_over_mean_spacing(find_zeros(
      [&](double t) { return factors.modulation({x, 0.0, 0.0, t}); },
      t_window));
}

double dephasing(const BoostParams& params, double dx) {
  params.validate();
  const double c = params.c;
  return lorentz_factor(params.beta) * params.omega0 * params.velocity() * dx /
         (c * c);
}

IsotropyFrame isotropy_search(double omega_forward, double omega_rearward,
                              const BoostParams& params) {
  if (!(omega_forward > 0.0) || !(omega_rearward > 0.0) ||
      !std::isfinite(omega_forward) || !std::isfinite(omega_rearward)) {
    throw NoSolution("ray frequencies must be positive and finite");
  }
  // Seen from a frame moving at b the forward ray is red-shifted by (1 - b)
  // and the rearward ray blue-shifted by (1 + b); the scale s(b) is common.
  const auto mismatch = [&](double b) {
    return omega_forward * (1.0 - b) - omega_rearward * (1.0 + b);
  };
  IsotropyFrame frame;
  frame.beta = omega_forward == omega_rearward
                   ? 0.0
                   : bisect_root(mismatch, -1.0, 1.0);
  if (!(std::abs(frame.beta) < 1.0)) {
    throw NoSolution("ray pair cannot be equalized by a subluminal frame");
  }
  frame.common_omega = scale_factor(frame.beta, params.exponent_a) *
                       omega_forward * (1.0 - frame.beta);
  return frame;
}

double group_closure_defect(double exponent_a, double beta1, double beta2) {
  const double composed = compose_velocities(beta1, beta2);
  if (!(std::abs(beta2) < 1.0) || !(std::abs(composed) < 1.0)) {
    throw DomainError("closure defect needs subluminal boosts");
  }
  const auto forward = [&](double b) {
    return scale_factor(b, exponent_a) * (1.0 + b);
  };
  const auto rearward = [&](double b) {
    return scale_factor(b, exponent_a) * (1.0 - b);
  };
  const double df =
      std::abs(forward(beta1) * forward(beta2) / forward(composed) - 1.0);
  const double dr =
      std::abs(rearward(beta1) * rearward(beta2) / rearward(composed) - 1.0);
  return std::max(df, dr);
}

DetectabilityReport detectability_report(double exponent_a, double beta1,
                                         double beta2,
                                         const BoostParams& base) {
  DetectabilityReport report;
  report.exponent_a = exponent_a;
  report.beta1 = beta1;
  report.beta2 = beta2;
  report.closure_defect = group_closure_defect(exponent_a, beta1, beta2);

  BoostParams moving = base;
  moving.beta = compose_velocities(beta1, beta2);
  moving.exponent_a = exponent_a;
  const RayPair rays = doppler_pair(moving);
  const IsotropyFrame frame = isotropy_search(rays.omega1, rays.omega2, moving);
  report.isotropy_frame_beta = frame.beta;
  report.isotropy_common_omega = frame.common_omega;
  report.anisotropy_flag = report.closure_defect > kAnisotropyThreshold;
  return report;
}

std::vector<DetectabilityReport> detectability_sweep(
    std::span<const double> exponents, std::span<const double> betas,
    const BoostParams& base, unsigned workers) {
  const std::size_t cells = exponents.size() * betas.size();
  std::vector<DetectabilityReport> reports(cells);
  std::vector<std::exception_ptr> errors(cells);
  std::atomic<std::size_t> next{0};

  const auto work = [&] {
    for (std::size_t i = next++; i < cells; i = next++) {
      const double a = exponents[i / betas.size()];
      const double b = betas[i % betas.size()];
      try {
        reports[i] = detectability_report(a, b, b, base);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(cells, 1)));
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

QuantizationResult decompose_loop_phase(double loop_phase) {
  if (!std::isfinite(loop_phase) || loop_phase < 0.0) {
    throw DomainError("loop phase must be finite and non-negative");
  }
  constexpr double kPi = kTwoPi / 2.0;
  auto n = static_cast<std::int64_t>(std::floor(loop_phase / kTwoPi + 0.5));
  double residual = loop_phase - kTwoPi * static_cast<double>(n);
  // Residual lives in (-pi, pi]; an exact half turn keeps the smaller n.
  while (residual <= -kPi) {
    --n;
    residual = loop_phase - kTwoPi * static_cast<double>(n);
  }
  while (residual > kPi) {
    ++n;
    residual = loop_phase - kTwoPi * static_cast<double>(n);
  }
  // For n >= 1 the subtraction is exact (the operands are within a factor of
  // two), so kTwoPi * n + residual reproduces loop_phase.
  return {loop_phase, n, residual};
}

QuantizationResult bohr_residual(double kappa_dB, double path_length) {
  if (!(kappa_dB >= 0.0) || !std::isfinite(kappa_dB)) {
    throw DomainError("de Broglie wave number must be non-negative");
  }
  if (!(path_length > 0.0) || !std::isfinite(path_length)) {
    throw DomainError("path length must be positive");
  }
  return decompose_loop_phase(kappa_dB * path_length);
}

namespace {

Vec3 minus(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

double norm(const Vec3& a) { return std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z); }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Curvature of the circle through three points; 0 when collinear.
double circumcurvature(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 ab = minus(b, a);
  const Vec3 ac = minus(c, a);
  const Vec3 bc = minus(c, b);
  const double denom = norm(ab) * norm(ac) * norm(bc);
  if (denom == 0.0) return 0.0;
  return 2.0 * norm(cross(ab, ac)) / denom;
}

// Length of a circular arc of curvature k subtending the given chord.
double arc_length(double chord, double k) {
  const double h = k * chord;
  if (h < 1e-4) return chord * (1.0 + h * h / 24.0);
  return 2.0 / k * std::asin(std::min(1.0, 0.5 * h));
}

}  // namespace

QuantizationResult bohr_path_integral(std::span<const Vec3> path,
                                      std::span<const double> kappa_dB) {
  if (path.size() < 3) {
    throw InsufficientSamples("closed path needs at least 3 samples");
  }
  if (kappa_dB.size() != path.size()) {
    throw InsufficientSamples("need one de Broglie wave number per sample");
  }
  double scale = 1.0;
  for (const auto& p : path) {
    scale = std::max({scale, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
  }
  if (norm(minus(path.front(), path.back())) > 1e-12 * scale) {
    throw OpenPathError("path is not closed: first and last samples differ");
  }

  // Distinct vertices; the last sample duplicates the first.
  const std::size_t m = path.size() - 1;
  std::vector<double> curvature(m);
  for (std::size_t i = 0; i < m; ++i) {
    curvature[i] = circumcurvature(path[(i + m - 1) % m], path[i],
                                   path[(i + 1) % m]);
  }
  double phase = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double chord = norm(minus(path[i + 1], path[i]));
    const double k = 0.5 * (curvature[i] + curvature[(i + 1) % m]);
    phase += 0.5 * (kappa_dB[i] + kappa_dB[i + 1]) * arc_length(chord, k);
  }
  return decompose_loop_phase(phase);
}

}  // namespace wavekin
