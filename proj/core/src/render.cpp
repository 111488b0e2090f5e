#include "wavekin/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <string>

#include "wavekin/analysis.hpp"
#include "wavekin/errors.hpp"
#include "wavekin/export.hpp"

namespace wavekin {

std::string_view to_string(RenderStyle s) {
  return s == RenderStyle::heatmap ? "heatmap" : "line-snapshots";
}

RenderStyle render_style_from_string(std::string_view tag) {
  if (tag == "heatmap") return RenderStyle::heatmap;
  if (tag == "line-snapshots") return RenderStyle::line_snapshots;
  throw ConfigError("unknown render style '" + std::string(tag) + "'");
}

void Image::set(int px, int py, std::uint8_t r, std::uint8_t g,
                std::uint8_t b) {
  if (px < 0 || py < 0 || px >= width || py >= height) return;
  const auto i = 3 * (static_cast<std::size_t>(py) * width + px);
  rgb[i] = r;
  rgb[i + 1] = g;
  rgb[i + 2] = b;
}

namespace {

using Rgb = std::array<std::uint8_t, 3>;

Image blank(int width, int height, Rgb fill) {
  Image img;
  img.width = width;
  img.height = height;
  img.rgb.resize(static_cast<std::size_t>(width) * height * 3);
  for (std::size_t i = 0; i < img.rgb.size(); i += 3) {
    img.rgb[i] = fill[0];
    img.rgb[i + 1] = fill[1];
    img.rgb[i + 2] = fill[2];
  }
  return img;
}

// Diverging blue-white-red map on [-1, 1].
Rgb diverging(double u) {
  u = std::clamp(u, -1.0, 1.0);
  const auto ch = [](double v) {
    return static_cast<std::uint8_t>(std::lround(255.0 * v));
  };
  if (u < 0.0) return {ch(1.0 + u), ch(1.0 + u), 255};
  return {255, ch(1.0 - u), ch(1.0 - u)};
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m > 0.0 ? m : 1.0;
}

void draw_line(Image& img, int x0, int y0, int x1, int y1, Rgb c) {
  const int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
  const int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  for (;;) {
    img.set(x0, y0, c[0], c[1], c[2]);
    if (x0 == x1 && y0 == y1) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

void fill_rect(Image& img, int x0, int y0, int x1, int y1, Rgb c) {
  for (int y = std::min(y0, y1); y <= std::max(y0, y1); ++y) {
    for (int x = std::min(x0, x1); x <= std::max(x0, x1); ++x) {
      img.set(x, y, c[0], c[1], c[2]);
    }
  }
}

std::size_t cell(int pixel, int pixels, std::size_t count) {
  const double u = (pixel + 0.5) / pixels;
  return std::min(count - 1, static_cast<std::size_t>(u * count));
}

Image render_heatmap(const FieldGrid& grid, int width, int height) {
  const auto swept = grid.swept_axes();
  if (swept.size() != 2) {
    throw ConfigError("heatmap needs exactly two swept axes, grid has " +
                      std::to_string(swept.size()));
  }
  const AxisId h = swept[0];
  const AxisId v = swept[1];
  const double scale = max_abs(grid.values);
  Image img = blank(width, height, {255, 255, 255});
  std::array<std::size_t, 4> idx{};
  for (int py = 0; py < height; ++py) {
    // Second axis increases upwards.
    idx[static_cast<int>(v)] =
        grid.spec[v].count - 1 - cell(py, height, grid.spec[v].count);
    for (int px = 0; px < width; ++px) {
      idx[static_cast<int>(h)] = cell(px, width, grid.spec[h].count);
      const double value = grid.at(idx[0], idx[1], idx[2], idx[3]);
      const Rgb c = diverging(value / scale);
      img.set(px, py, c[0], c[1], c[2]);
    }
  }
  return img;
}

void require_line_snapshot_grid(const FieldGrid& grid) {
  const auto swept = grid.swept_axes();
  if (swept != std::vector<AxisId>{AxisId::x, AxisId::t}) {
    throw ConfigError(
        "line-snapshots needs a grid swept over x and t only");
  }
}

constexpr std::array<Rgb, 6> kPalette{{{31, 119, 180},
                                       {214, 39, 40},
                                       {44, 160, 44},
                                       {148, 103, 189},
                                       {255, 127, 14},
                                       {23, 190, 207}}};

Image render_line_snapshots(const FieldGrid& grid, int width, int height) {
  require_line_snapshot_grid(grid);
  const AxisSpec& xs = grid.spec[AxisId::x];
  const AxisSpec& ts = grid.spec[AxisId::t];
  const double scale = max_abs(grid.values);

  Image img = blank(width, height, {255, 255, 255});
  const int band = std::max(4, height / 16);
  const int plot_top = band;
  const int plot_bottom = height - 1 - band;
  const auto to_px = [&](double x) {
    return static_cast<int>(std::lround((x - xs.min) / (xs.max - xs.min) *
                                        (width - 1)));
  };
  const auto to_py = [&](double value) {
    const double u = 0.5 - 0.45 * value / scale;
    return plot_top + static_cast<int>(std::lround(u * (plot_bottom - plot_top)));
  };

  draw_line(img, 0, to_py(0.0), width - 1, to_py(0.0), {160, 160, 160});
  for (std::size_t it = 0; it < ts.count; ++it) {
    const Rgb c = kPalette[it % kPalette.size()];
    for (std::size_t ix = 1; ix < xs.count; ++ix) {
      draw_line(img, to_px(xs.coordinate(ix - 1)),
                to_py(grid.at(ix - 1, 0, 0, it)), to_px(xs.coordinate(ix)),
                to_py(grid.at(ix, 0, 0, it)), c);
    }
  }

  // Modulation fronts along the top band, carrier nodes along the bottom.
  const SnapshotMarkers markers = snapshot_markers(grid);
  for (std::size_t i = 0; i < markers.times.size(); ++i) {
    const Rgb c = kPalette[i % kPalette.size()];
    const int mx = to_px(markers.modulation[i]);
    const int cx = to_px(markers.carrier[i]);
    fill_rect(img, mx - 2, 0, mx + 2, band - 2, c);
    fill_rect(img, cx - 2, height - band + 1, cx + 2, height - 1, c);
  }
  return img;
}

}  // namespace

SnapshotMarkers snapshot_markers(const FieldGrid& grid) {
  require_line_snapshot_grid(grid);
  SnapshotMarkers markers;
  const BoostParams& params = grid.metadata.params;
  if (params.beta == 0.0) return markers;

  const AxisSpec& ts = grid.spec[AxisId::t];
  const AxisSpec& xs = grid.spec[AxisId::x];
  // Track on a 4x finer time axis whose every fourth sample is a grid time.
  constexpr std::size_t kRefine = 4;
  const AxisSpec fine{ts.min, ts.max, kRefine * (ts.count - 1) + 1};
  std::vector<double> times(fine.count);
  for (std::size_t i = 0; i < fine.count; ++i) times[i] = fine.coordinate(i);

  const FactorPair factors(params);
  const Window window{xs.min, xs.max};
  FrontTrace carrier, modulation;
  try {
    carrier = track_front(factors, window, times, FrontTarget::carrier_node);
    modulation =
        track_front(factors, window, times, FrontTarget::modulation_crest);
  } catch (const FeatureNotFound&) {
    return markers;
  }
  for (std::size_t it = 0; it < ts.count; ++it) {
    markers.times.push_back(ts.coordinate(it));
    markers.carrier.push_back(carrier.positions[it * kRefine]);
    markers.modulation.push_back(modulation.positions[it * kRefine]);
  }
  return markers;
}

Image render(const FieldGrid& grid, RenderStyle style, int width, int height) {
  if (width <= 0 || height <= 0) throw ConfigError("image size must be positive");
  if (grid.values.size() != grid.spec.point_count()) {
    throw ConfigError("grid values do not match its axes");
  }
  return style == RenderStyle::heatmap
             ? render_heatmap(grid, width, height)
             : render_line_snapshots(grid, width, height);
}

void write_ppm(const Image& image, const std::filesystem::path& path) {
  std::string data = "P6\n" + std::to_string(image.width) + " " +
                     std::to_string(image.height) + "\n255\n";
  data.append(reinterpret_cast<const char*>(image.rgb.data()),
              image.rgb.size());
  write_text_file(path, data);
}

void render_to_file(const FieldGrid& grid, RenderStyle style,
                    const std::filesystem::path& path, int width, int height) {
  write_ppm(render(grid, style, width, height), path);
}

}  // namespace wavekin
