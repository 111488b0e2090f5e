#include "wavekin/rayconstruct.hpp"

#include <cmath>

#include "wavekin/errors.hpp"

namespace wavekin {

RaySpeedConfig::RaySpeedConfig(const BoostParams& params, double ray_speed)
    : ray_speed_(ray_speed) {
  params.validate();
  if (!std::isfinite(ray_speed) || !(ray_speed > std::abs(params.velocity()))) {
    throw DomainError("ray speed must exceed the particle speed |v|");
  }
  beta_ray_ =
      ray_speed == params.c ? params.beta : params.velocity() / ray_speed;
  gamma_ray_ = lorentz_factor(beta_ray_);
  scale_ = std::pow(gamma_ray_, params.exponent_a);
}

RetardationTimes retardation_times(const BoostParams& params, double ray_speed,
                                   const SpacetimePoint& p) {
  const RaySpeedConfig rays(params, ray_speed);
  const double v = params.velocity();
  const double C = ray_speed;
  const double dx = p.x - v * p.t;
  const double rho2 = p.y * p.y + p.z * p.z;
  const double b = rays.beta_ray();
  const double root = C * std::sqrt(dx * dx + (1.0 - b * b) * rho2);
  const double denom = C * C - v * v;
  const double r2 = dx * dx + rho2;
  const double vdx = v * dx;

  // (C^2 - v^2) t^2 -/+ 2 v dx t - (dx^2 + rho^2) = 0 has one positive root.
  // Use the product of roots on the side where the direct form cancels.
  RetardationTimes times;
  times.t1 = vdx >= 0.0 ? (vdx + root) / denom
                        : (root > 0.0 ? r2 / (root - vdx) : 0.0);
  times.t2 = vdx <= 0.0 ? (root - vdx) / denom
                        : (root > 0.0 ? r2 / (root + vdx) : 0.0);
  return times;
}

RetardationTimes retardation_times(const BoostParams& params,
                                   const SpacetimePoint& p) {
  return retardation_times(params, params.c, p);
}

namespace {

double centre_phase_rate(const BoostParams& params, double ray_speed) {
  const RaySpeedConfig rays(params, ray_speed);
  const double b = rays.beta_ray();
  return rays.scale() * params.omega0 * (1.0 - b * b);
}

}  // namespace

double ray_phase_at_emission(const BoostParams& params, double t, double t1) {
  return ray_phase_at_emission(params, params.c, t, t1);
}

double ray_phase_at_emission(const BoostParams& params, double ray_speed,
                             double t, double t1) {
  return centre_phase_rate(params, ray_speed) * (t - t1);
}

double ray_phase_at_absorption(const BoostParams& params, double t, double t2) {
  return ray_phase_at_absorption(params, params.c, t, t2);
}

double ray_phase_at_absorption(const BoostParams& params, double ray_speed,
                               double t, double t2) {
  return centre_phase_rate(params, ray_speed) * (t + t2);
}

std::complex<double> interfere_complex(const BoostParams& params,
                                       double ray_speed,
                                       const SpacetimePoint& p) {
  const RetardationTimes times = retardation_times(params, ray_speed, p);
  const double phase_a =
      ray_phase_at_emission(params, ray_speed, p.t, times.t1);
  const double phase_c =
      ray_phase_at_absorption(params, ray_speed, p.t, times.t2);
  return (std::polar(1.0, phase_a) - std::polar(1.0, phase_c)) / 2.0;
}

double interfere(const BoostParams& params, double ray_speed,
                 const SpacetimePoint& p) {
  return -interfere_complex(params, ray_speed, p).imag();
}

double interfere(const BoostParams& params, const SpacetimePoint& p) {
  return interfere(params, params.c, p);
}

EnvelopeScales envelope_scales(const BoostParams& params, double ray_speed) {
  const RaySpeedConfig rays(params, ray_speed);
  return {1.0 / rays.scale(), rays.gamma_ray() / rays.scale()};
}

}  // namespace wavekin
