#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wavekin/field.hpp"
#include "wavekin/kinematics.hpp"
#include "wavekin/wavemodel.hpp"

namespace wavekin {

enum class AxisId { x = 0, y = 1, z = 2, t = 3 };

inline constexpr std::array<AxisId, 4> kAllAxes{AxisId::x, AxisId::y,
                                                AxisId::z, AxisId::t};

const char* axis_name(AxisId id);

// Inclusive sampling range. count == 1 pins the axis at min.
struct AxisSpec {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 1;

  bool swept() const noexcept { return count >= 2; }
  // Endpoint-exact: coordinate(0) == min, coordinate(count - 1) == max.
  double coordinate(std::size_t i) const;

  friend bool operator==(const AxisSpec&, const AxisSpec&) = default;
};

struct GridSpec {
  // Indexed by AxisId.
  std::array<AxisSpec, 4> axes{};

  AxisSpec& operator[](AxisId id) { return axes[static_cast<int>(id)]; }
  const AxisSpec& operator[](AxisId id) const {
    return axes[static_cast<int>(id)];
  }

  std::size_t point_count() const;
  // Throws ConfigError on zero counts, non-finite bounds or min == max on a
  // swept axis.
  void validate() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct GridMetadata {
  std::string scenario;
  BoostParams params;
  Provenance provenance = Provenance::rest;
  AmplitudeMode amplitude_mode = AmplitudeMode::unit;
  double ray_speed = 1.0;
  // Omitted in deterministic runs so repeated exports are byte-identical.
  std::optional<std::string> timestamp;
};

// Sampled field values, row-major with t outermost and x fastest:
// index = ((it * nz + iz) * ny + iy) * nx + ix.
struct FieldGrid {
  GridSpec spec;
  std::vector<double> values;
  GridMetadata metadata;

  std::size_t size() const noexcept { return values.size(); }
  std::size_t flat_index(std::size_t ix, std::size_t iy, std::size_t iz,
                         std::size_t it) const;
  SpacetimePoint point(std::size_t flat) const;
  double at(std::size_t ix, std::size_t iy, std::size_t iz,
            std::size_t it) const {
    return values[flat_index(ix, iy, iz, it)];
  }
  std::vector<AxisId> swept_axes() const;
};

// Evaluates the field at every grid point using up to `workers` threads
// (0 = hardware concurrency). The result does not depend on the worker count.
// Throws ConfigError if any sampled value is non-finite and SingularityError
// if an inverse-r field is sampled at the origin.
FieldGrid sample_field(const WaveField& field, const GridSpec& spec,
                       unsigned workers = 0);

}  // namespace wavekin
