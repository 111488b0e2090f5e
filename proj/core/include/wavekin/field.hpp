#pragma once

#include <string_view>

#include "wavekin/kinematics.hpp"
#include "wavekin/wavemodel.hpp"

namespace wavekin {

enum class Provenance {
  rest,
  boosted_closed_form,
  one_d_travelling,
  ray_constructed,
  generalized_closed_form,
};

std::string_view to_string(Provenance p);
// Throws ConfigError for unknown tags.
Provenance provenance_from_string(std::string_view tag);

std::string_view to_string(AmplitudeMode m);
AmplitudeMode amplitude_mode_from_string(std::string_view tag);

// An evaluatable scalar field Psi(x, y, z, t) with its provenance. Immutable
// and safe to evaluate concurrently.
class WaveField {
 public:
  // Validates params; inverse_r amplitude is only accepted for rest fields and
  // ray_speed only matters for ray-constructed and generalized fields.
  WaveField(BoostParams params, Provenance provenance,
            AmplitudeMode amplitude_mode = AmplitudeMode::unit);
  WaveField(BoostParams params, Provenance provenance, double ray_speed);

  double operator()(const SpacetimePoint& p) const;

  const BoostParams& params() const noexcept { return params_; }
  Provenance provenance() const noexcept { return provenance_; }
  AmplitudeMode amplitude_mode() const noexcept { return amplitude_mode_; }
  double ray_speed() const noexcept { return ray_speed_; }

 private:
  BoostParams params_;
  Provenance provenance_;
  AmplitudeMode amplitude_mode_;
  double ray_speed_;
};

}  // namespace wavekin
