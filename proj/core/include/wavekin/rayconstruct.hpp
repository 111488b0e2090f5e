#pragma once

// Construction of the moving wave from ray interference. A field point P at
// time t sees the outgoing ray that left the centre at A (time t - t1) and
// the incoming ray that reaches the centre at C (time t + t2). All rays
// through the centre share one phase.
//
// Rays travel at ray_speed C, which defaults to the wave speed c. A ray-built
// particle with C != c contracts with g_C = (1 - v^2/C^2)^(-1/2) rather than
// with the Lorentz factor of c.

#include <complex>

#include "wavekin/kinematics.hpp"
#include "wavekin/wavemodel.hpp"

namespace wavekin {

struct RetardationTimes {
  double t1 = 0.0;  // emission delay
  double t2 = 0.0;  // absorption lead
};

class RaySpeedConfig {
 public:
  // Throws DomainError unless ray_speed > |v|.
  RaySpeedConfig(const BoostParams& params, double ray_speed);

  double ray_speed() const noexcept { return ray_speed_; }
  // v / C (exactly beta when C == c).
  double beta_ray() const noexcept { return beta_ray_; }
  double gamma_ray() const noexcept { return gamma_ray_; }
  // g_C^a, the Doppler scale of the ray pair.
  double scale() const noexcept { return scale_; }

 private:
  double ray_speed_;
  double beta_ray_;
  double gamma_ray_;
  double scale_;
};

// Positive roots of C^2 t1^2 = (x - v (t - t1))^2 + y^2 + z^2 and
// C^2 t2^2 = (x - v (t + t2))^2 + y^2 + z^2.
RetardationTimes retardation_times(const BoostParams& params, double ray_speed,
                                   const SpacetimePoint& p);
RetardationTimes retardation_times(const BoostParams& params,
                                   const SpacetimePoint& p);

// Centre phase when the outgoing ray left A: s w0 (1 - v^2/C^2) (t - t1).
double ray_phase_at_emission(const BoostParams& params, double t, double t1);
double ray_phase_at_emission(const BoostParams& params, double ray_speed,
                             double t, double t1);

// Centre phase when the incoming ray reaches C: s w0 (1 - v^2/C^2) (t + t2).
double ray_phase_at_absorption(const BoostParams& params, double t, double t2);
double ray_phase_at_absorption(const BoostParams& params, double ray_speed,
                               double t, double t2);

// [exp(i phi_A) - exp(i phi_C)] / 2 at P.
std::complex<double> interfere_complex(const BoostParams& params,
                                       double ray_speed,
                                       const SpacetimePoint& p);

// Real travelling wave of the composition, -Im of interfere_complex. With
// a = 1 and C = c it equals boosted_closed_form.
double interfere(const BoostParams& params, double ray_speed,
                 const SpacetimePoint& p);
double interfere(const BoostParams& params, const SpacetimePoint& p);

// Envelope node spacings relative to the rest spacing pi / kappa_C of the
// same ray-built particle.
struct EnvelopeScales {
  double longitudinal = 1.0;  // 1 / s
  double transverse = 1.0;    // g_C / s
};

EnvelopeScales envelope_scales(const BoostParams& params, double ray_speed);

}  // namespace wavekin
