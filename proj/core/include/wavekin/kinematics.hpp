#pragma once

// Scalar relativistic bookkeeping for a single collinear boost: Lorentz
// factor and its gamma^a family, Doppler-shifted ray pairs, de Broglie
// quantities and velocity composition. All quantities are in caller units;
// the defaults are natural units c = omega0 = hbar = 1.

#include <optional>

namespace wavekin {

// Configuration of one boosted-wave scenario. The velocity is stored as the
// fraction beta = v/c; v and kappa0 are always derived.
struct BoostParams {
  double beta = 0.0;
  double c = 1.0;
  double omega0 = 1.0;
  double exponent_a = 1.0;
  double hbar = 1.0;

  double velocity() const noexcept { return beta * c; }
  // Rest wave number omega0/c. Not the de Broglie wave number.
  double kappa0() const noexcept { return omega0 / c; }

  // Throws DomainError unless |beta| < 1, c, omega0, hbar > 0 and a finite.
  void validate() const;
};

// A speed that may be divergent (the de Broglie phase speed at rest).
class Speed {
 public:
  static Speed finite(double value) { return Speed(value); }
  static Speed divergent() { return Speed(); }

  bool is_divergent() const noexcept { return !value_.has_value(); }
  // Throws DomainError when divergent.
  double value() const;

  friend bool operator==(const Speed&, const Speed&) = default;

 private:
  Speed() = default;
  explicit Speed(double v) : value_(v) {}
  std::optional<double> value_;
};

// Forward (1) and rearward (2) rays of the boosted standing wave.
struct RayPair {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
};

struct DeBroglieQuantities {
  double omega_E = 0.0;   // dilated frequency gamma * omega0
  double kappa_dB = 0.0;  // gamma * kappa0 * beta
  double energy = 0.0;    // hbar * omega_E
  double momentum = 0.0;  // hbar * kappa_dB
  Speed phase_speed = Speed::divergent();
};

// (1 - beta^2)^(-1/2). Throws DomainError for |beta| >= 1 or non-finite beta.
double lorentz_factor(double beta);

// gamma^a. a = 0 is the Galilean member of the family (always 1).
double scale_factor(double beta, double exponent_a);

// omega_{1,2} = s omega0 (1 +/- beta), kappa_i = omega_i / c, s = gamma^a.
RayPair doppler_pair(const BoostParams& params);

DeBroglieQuantities de_broglie(const BoostParams& params);

// Collinear relativistic composition (b1 + b2) / (1 + b1 b2).
double compose_velocities(double beta1, double beta2);

}  // namespace wavekin
