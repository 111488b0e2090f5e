#pragma once

// Closed-form scalar fields of the standing-wave particle: the rest-frame
// spherical standing wave, the 1D travelling wave, the boosted 3D wave and
// its carrier/modulation factors, and the gamma^a generalization.
//
// All fields are real. Past the rest frame the 1/|r| amplitude is omitted.

#include "wavekin/kinematics.hpp"

namespace wavekin {

struct SpacetimePoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double t = 0.0;
};

enum class AmplitudeMode { unit, inverse_r };

// sin(kappa0 |r|) cos(omega0 t), divided by |r| in inverse_r mode.
// Throws SingularityError at r = 0 in inverse_r mode.
double rest_amplitude(const BoostParams& params, const SpacetimePoint& p,
                      AmplitudeMode mode = AmplitudeMode::unit);

// sin(g kappa0 (x - v t)) cos(g (omega0 t - kappa0 v x / c)), g = gamma.
// Reduces to sin(kappa0 x) cos(omega0 t) at beta = 0.
double one_d_travelling(const BoostParams& params, double x, double t);

// The same 1D wave obtained by composing the forward and rearward rays of
// doppler_pair as complex exponentials. Independent of one_d_travelling.
double one_d_composed(const BoostParams& params, double x, double t);

// sin(kappa0 sqrt(g^2 (x - v t)^2 + y^2 + z^2)) cos(g omega0 (t - v x / c^2)).
// Requires exponent_a == 1 (DomainError otherwise).
double boosted_closed_form(const BoostParams& params, const SpacetimePoint& p);

// Closed form of the ray construction for any exponent a and ray speed C:
//   sin(kappa_C sqrt(s^2 (x - v t)^2 + (s / g_C)^2 (y^2 + z^2)))
//     * cos(s omega0 (t - v x / C^2))
// with g_C = (1 - v^2/C^2)^(-1/2), s = g_C^a and kappa_C = omega0 / C.
// At a = 1, C = c it is bit-identical to boosted_closed_form.
double generalized_closed_form(const BoostParams& params,
                               const SpacetimePoint& p);
double generalized_closed_form(const BoostParams& params,
                               const SpacetimePoint& p, double ray_speed);

// Rest-frame coordinates of a laboratory event under the Lorentz map
// x' = g (x - v t), t' = g (t - v x / c^2).
SpacetimePoint to_rest_frame(const BoostParams& params,
                             const SpacetimePoint& p);

// Carrier and modulation factors of the boosted wave. The product of the two
// equals generalized_closed_form (and boosted_closed_form at a = 1) bit for
// bit, since both are evaluated with the same expressions.
class FactorPair {
 public:
  explicit FactorPair(const BoostParams& params);

  double carrier(const SpacetimePoint& p) const;
  double modulation(const SpacetimePoint& p) const;

  // Arguments of the sine and cosine, unreduced.
  double carrier_phase(const SpacetimePoint& p) const;
  double modulation_phase(const SpacetimePoint& p) const;

  // v: the carrier moves with the particle.
  Speed carrier_speed() const;
  // c^2 / v, divergent at rest.
  Speed modulation_speed() const;

  const BoostParams& params() const noexcept { return params_; }

 private:
  BoostParams params_;
  double scale_;
  double transverse_weight_;
};

FactorPair factorize(const BoostParams& params);

}  // namespace wavekin
