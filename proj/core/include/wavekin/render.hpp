#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "wavekin/grid.hpp"

namespace wavekin {

enum class RenderStyle { heatmap, line_snapshots };

std::string_view to_string(RenderStyle s);
RenderStyle render_style_from_string(std::string_view tag);

struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;  // row-major, 3 bytes per pixel

  void set(int px, int py, std::uint8_t r, std::uint8_t g, std::uint8_t b);
};

// Carrier node and modulation front positions per snapshot time.
struct SnapshotMarkers {
  std::vector<double> times;
  std::vector<double> carrier;
  std::vector<double> modulation;
};

// Fronts for a line-snapshot grid (x and t swept), tracked on the factors of
// the grid's parameters. Empty when beta == 0.
SnapshotMarkers snapshot_markers(const FieldGrid& grid);

// heatmap needs exactly two swept axes; line_snapshots needs x and t swept
// and nothing else. Throws ConfigError on a dimensionality mismatch.
Image render(const FieldGrid& grid, RenderStyle style, int width = 1024,
             int height = 768);

// Binary PPM (P6).
void write_ppm(const Image& image, const std::filesystem::path& path);

// Renders then writes; nothing is written if rendering fails.
void render_to_file(const FieldGrid& grid, RenderStyle style,
                    const std::filesystem::path& path, int width = 1024,
                    int height = 768);

}  // namespace wavekin
