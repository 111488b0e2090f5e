#include "wavekin/wavemodel.hpp"

#include <cmath>
#include <complex>

#include "wavekin/errors.hpp"

namespace wavekin {

namespace {

// beta of the ray speed, exactly params.beta when ray_speed == c.
double ray_beta(const BoostParams& params, double ray_speed) {
  return ray_speed == params.c ? params.beta : params.velocity() / ray_speed;
}

}  // namespace

double rest_amplitude(const BoostParams& params, const SpacetimePoint& p,
                      AmplitudeMode mode) {
  params.validate();
  const double r = std::sqrt(p.x * p.x + (p.y * p.y + p.z * p.z));
  const double value =
      std::sin(params.kappa0() * r) * std::cos(params.omega0 * p.t);
  if (mode == AmplitudeMode::unit) return value;
  if (r == 0.0) {
    throw SingularityError("inverse-r rest amplitude is singular at r = 0");
  }
  return value / r;
}

double one_d_travelling(const BoostParams& params, double x, double t) {
  params.validate();
  const double g = lorentz_factor(params.beta);
  const double k0 = params.kappa0();
  const double v = params.velocity();
  return std::sin(g * k0 * (x - v * t)) *
         std::cos(g * (params.omega0 * t - k0 * v * x / params.c));
}

double one_d_composed(const BoostParams& params, double x, double t) {
  const RayPair rays = doppler_pair(params);
  using namespace std::complex_literals;
  const std::complex<double> forward =
      std::exp(1i * (rays.omega1 * t - rays.kappa1 * x));
  const std::complex<double> rearward =
      std::exp(1i * (rays.omega2 * t + rays.kappa2 * x));
  return -((forward - rearward) / 2.0).imag();
}

double boosted_closed_form(const BoostParams& params, const SpacetimePoint& p) {
  params.validate();
  if (params.exponent_a != 1.0) {
    throw DomainError(
        "boosted closed form needs exponent a = 1; use the generalized form");
  }
  const double g = lorentz_factor(params.beta);
  const double v = params.velocity();
  const double c = params.c;
  const double dx = p.x - v * p.t;
  return std::sin(params.kappa0() * std::sqrt(g * g * dx * dx +
                                              (p.y * p.y + p.z * p.z))) *
         std::cos(g * params.omega0 * (p.t - v * p.x / (c * c)));
}

double generalized_closed_form(const BoostParams& params,
                               const SpacetimePoint& p) {
  return generalized_closed_form(params, p, params.c);
}

double generalized_closed_form(const BoostParams& params,
                               const SpacetimePoint& p, double ray_speed) {
  params.validate();
  const double v = params.velocity();
  if (!(ray_speed > std::abs(v)) || !std::isfinite(ray_speed)) {
    throw DomainError("ray speed must exceed the particle speed");
  }
  const double gamma_ray = lorentz_factor(ray_beta(params, ray_speed));
  const double s = std::pow(gamma_ray, params.exponent_a);
  const double w = (s / gamma_ray) * (s / gamma_ray);
  const double kappa = params.omega0 / ray_speed;
  const double dx = p.x - v * p.t;
  return std::sin(kappa * std::sqrt(s * s * dx * dx +
                                    w * (p.y * p.y + p.z * p.z))) *
         std::cos(s * params.omega0 * (p.t - v * p.x / (ray_speed * ray_speed)));
}

SpacetimePoint to_rest_frame(const BoostParams& params,
                             const SpacetimePoint& p) {
  params.validate();
  const double g = lorentz_factor(params.beta);
  const double v = params.velocity();
  return {g * (p.x - v * p.t), p.y, p.z,
          g * (p.t - v * p.x / (params.c * params.c))};
}

FactorPair::FactorPair(const BoostParams& params) : params_(params) {
  params_.validate();
  const double g = lorentz_factor(params_.beta);
  scale_ = std::pow(g, params_.exponent_a);
  transverse_weight_ = (scale_ / g) * (scale_ / g);
}

double FactorPair::carrier_phase(const SpacetimePoint& p) const {
  const double dx = p.x - params_.velocity() * p.t;
  return params_.kappa0() *
         std::sqrt(scale_ * scale_ * dx * dx +
                   transverse_weight_ * (p.y * p.y + p.z * p.z));
}

double FactorPair::modulation_phase(const SpacetimePoint& p) const {
  const double c = params_.c;
  return scale_ * params_.omega0 *
         (p.t - params_.velocity() * p.x / (c * c));
}

double FactorPair::carrier(const SpacetimePoint& p) const {
  return std::sin(carrier_phase(p));
}

double FactorPair::modulation(const SpacetimePoint& p) const {
  return std::cos(modulation_phase(p));
}

Speed FactorPair::carrier_speed() const {
  return Speed::finite(params_.velocity());
}

Speed FactorPair::modulation_speed() const {
  if (params_.beta == 0.0) return Speed::divergent();
  return Speed::finite(params_.c / params_.beta);
}

FactorPair factorize(const BoostParams& params) { return FactorPair(params); }

}  // namespace wavekin
