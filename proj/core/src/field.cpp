#include "wavekin/field.hpp"

#include <cmath>
#include <string>

#include "wavekin/errors.hpp"
#include "wavekin/rayconstruct.hpp"

namespace wavekin {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::rest: return "rest";
    case Provenance::boosted_closed_form: return "boosted-closed-form";
    case Provenance::one_d_travelling: return "one-d-travelling";
    case Provenance::ray_constructed: return "ray-constructed";
    case Provenance::generalized_closed_form: return "generalized-closed-form";
  }
  return "unknown";
}

Provenance provenance_from_string(std::string_view tag) {
  for (auto p : {Provenance::rest, Provenance::boosted_closed_form,
                 Provenance::one_d_travelling, Provenance::ray_constructed,
                 Provenance::generalized_closed_form}) {
    if (to_string(p) == tag) return p;
  }
  throw ConfigError("unknown provenance tag '" + std::string(tag) + "'");
}

std::string_view to_string(AmplitudeMode m) {
  return m == AmplitudeMode::unit ? "unit" : "inverse-r";
}

AmplitudeMode amplitude_mode_from_string(std::string_view tag) {
  if (tag == "unit") return AmplitudeMode::unit;
  if (tag == "inverse-r") return AmplitudeMode::inverse_r;
  throw ConfigError("unknown amplitude mode '" + std::string(tag) + "'");
}

WaveField::WaveField(BoostParams params, Provenance provenance,
                     AmplitudeMode amplitude_mode)
    : params_(params),
      provenance_(provenance),
      amplitude_mode_(amplitude_mode),
      ray_speed_(params.c) {
  params_.validate();
  if (amplitude_mode_ == AmplitudeMode::inverse_r &&
      provenance_ != Provenance::rest) {
    throw ConfigError("inverse-r amplitude is only defined for the rest field");
  }
  if (provenance_ == Provenance::boosted_closed_form &&
      params_.exponent_a != 1.0) {
    throw ConfigError(
        "boosted closed form needs a = 1; use the generalized form");
  }
}

WaveField::WaveField(BoostParams params, Provenance provenance,
                     double ray_speed)
    : WaveField(params, provenance, AmplitudeMode::unit) {
  if (ray_speed != params_.c && provenance_ != Provenance::ray_constructed &&
      provenance_ != Provenance::generalized_closed_form) {
    throw ConfigError(
        "ray speed applies only to ray-constructed and generalized fields");
  }
  static_cast<void>(RaySpeedConfig{params_, ray_speed});
  ray_speed_ = ray_speed;
}

double WaveField::operator()(const SpacetimePoint& p) const {
  switch (provenance_) {
    case Provenance::rest:
      return rest_amplitude(params_, p, amplitude_mode_);
    case Provenance::boosted_closed_form:
      return boosted_closed_form(params_, p);
    case Provenance::one_d_travelling:
      return one_d_travelling(params_, p.x, p.t);
    case Provenance::ray_constructed:
      return interfere(params_, ray_speed_, p);
    case Provenance::generalized_closed_form:
      return generalized_closed_form(params_, p, ray_speed_);
  }
  return std::nan("");
}

}  // namespace wavekin
