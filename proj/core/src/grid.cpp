#include "wavekin/grid.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "wavekin/errors.hpp"

namespace wavekin {

const char* axis_name(AxisId id) {
  switch (id) {
    case AxisId::x: return "x";
    case AxisId::y: return "y";
    case AxisId::z: return "z";
    case AxisId::t: return "t";
  }
  return "?";
}

double AxisSpec::coordinate(std::size_t i) const {
  if (count <= 1) return min;
  return std::lerp(min, max,
                   static_cast<double>(i) / static_cast<double>(count - 1));
}

std::size_t GridSpec::point_count() const {
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.count;
  return n;
}

void GridSpec::validate() const {
  for (AxisId id : kAllAxes) {
    const AxisSpec& a = (*this)[id];
    const std::string name = axis_name(id);
    if (a.count == 0) throw ConfigError("axis " + name + " has zero samples");
    if (!std::isfinite(a.min) || !std::isfinite(a.max)) {
      throw ConfigError("axis " + name + " has non-finite bounds");
    }
    if (a.swept() && a.min == a.max) {
      throw ConfigError("swept axis " + name + " needs min != max");
    }
  }
}

std::size_t FieldGrid::flat_index(std::size_t ix, std::size_t iy,
                                  std::size_t iz, std::size_t it) const {
  const std::size_t nx = spec[AxisId::x].count;
  const std::size_t ny = spec[AxisId::y].count;
  const std::size_t nz = spec[AxisId::z].count;
  return ((it * nz + iz) * ny + iy) * nx + ix;
}

SpacetimePoint FieldGrid::point(std::size_t flat) const {
  const std::size_t nx = spec[AxisId::x].count;
  const std::size_t ny = spec[AxisId::y].count;
  const std::size_t nz = spec[AxisId::z].count;
  const std::size_t ix = flat % nx;
  flat /= nx;
  const std::size_t iy = flat % ny;
  flat /= ny;
  const std::size_t iz = flat % nz;
  const std::size_t it = flat / nz;
  return {spec[AxisId::x].coordinate(ix), spec[AxisId::y].coordinate(iy),
          spec[AxisId::z].coordinate(iz), spec[AxisId::t].coordinate(it)};
}

std::vector<AxisId> FieldGrid::swept_axes() const {
  std::vector<AxisId> out;
  for (AxisId id : kAllAxes) {
    if (spec[id].swept()) out.push_back(id);
  }
  return out;
}

FieldGrid sample_field(const WaveField& field, const GridSpec& spec,
                       unsigned workers) {
  spec.validate();
  FieldGrid grid;
  grid.spec = spec;
  grid.metadata.params = field.params();
  grid.metadata.provenance = field.provenance();
  grid.metadata.amplitude_mode = field.amplitude_mode();
  grid.metadata.ray_speed = field.ray_speed();
  grid.values.resize(spec.point_count());

  const std::size_t n = grid.values.size();
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  const std::size_t chunk = (n + workers - 1) / workers;

  // Each worker owns a contiguous index range; values depend only on their
  // index, so the split cannot change the result.
  std::vector<std::exception_ptr> errors(workers);
  const auto work = [&](unsigned w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    try {
      for (std::size_t i = begin; i < end; ++i) {
        grid.values[i] = field(grid.point(i));
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(grid.values[i])) {
      throw ConfigError("non-finite field value at grid index " +
                        std::to_string(i));
    }
  }
  return grid;
}

}  // namespace wavekin
