#include "wavekin/kinematics.hpp"

#include <cmath>
#include <string>

#include "wavekin/errors.hpp"

namespace wavekin {

namespace {

void require_subluminal(double beta) {
  if (!std::isfinite(beta) || std::abs(beta) >= 1.0) {
    throw DomainError("boost velocity fraction must satisfy |beta| < 1, got " +
                      std::to_string(beta));
  }
}

}  // namespace

void BoostParams::validate() const {
  require_subluminal(beta);
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("wave speed c must be positive and finite");
  }
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
    throw DomainError("natural frequency omega0 must be positive and finite");
  }
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw DomainError("action scale hbar must be positive and finite");
  }
  if (!std::isfinite(exponent_a)) {
    throw DomainError("transform exponent a must be finite");
  }
}

double Speed::value() const {
  if (!value_) throw DomainError("speed is divergent");
  return *value_;
}

double lorentz_factor(double beta) {
  require_subluminal(beta);
  return 1.0 / std::sqrt(1.0 - beta * beta);
}

double scale_factor(double beta, double exponent_a) {
  if (!std::isfinite(exponent_a)) {
    throw DomainError("transform exponent a must be finite");
  }
  // pow(g, 0) == 1 and pow(g, 1) == g exactly.
  return std::pow(lorentz_factor(beta), exponent_a);
}

RayPair doppler_pair(const BoostParams& params) {
  params.validate();
  const double s = scale_factor(params.beta, params.exponent_a);
  RayPair pair;
  pair.omega1 = s * params.omega0 * (1.0 + params.beta);
  pair.omega2 = s * params.omega0 * (1.0 - params.beta);
  pair.kappa1 = pair.omega1 / params.c;
  pair.kappa2 = pair.omega2 / params.c;
  return pair;
}

DeBroglieQuantities de_broglie(const BoostParams& params) {
  params.validate();
  const double g = lorentz_factor(params.beta);
  DeBroglieQuantities q;
  q.omega_E = g * params.omega0;
  q.kappa_dB = g * params.kappa0() * params.beta;
  q.energy = params.hbar * q.omega_E;
  q.momentum = params.hbar * q.kappa_dB;
  q.phase_speed = params.beta == 0.0 ? Speed::divergent()
                                     : Speed::finite(params.c / params.beta);
  return q;
}

double compose_velocities(double beta1, double beta2) {
  require_subluminal(beta1);
  if (!std::isfinite(beta2) || std::abs(beta2) > 1.0) {
    throw DomainError("second velocity fraction must satisfy |beta| <= 1");
  }
  const double denom = 1.0 + beta1 * beta2;
  if (denom == 0.0) throw DomainError("velocity composition is singular");
  const double sum = beta1 + beta2;
  // Rounding must not push a subluminal composition onto the light cone.
  if (std::abs(beta2) < 1.0) {
    const double composed = sum / denom;
    if (std::abs(composed) >= 1.0) {
      return std::copysign(std::nextafter(1.0, 0.0), composed);
    }
    return composed;
  }
  return beta2;
}

}  // namespace wavekin
